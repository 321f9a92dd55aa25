use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use floercas::check::{self, Limits};
use floercas::floer::{hf_assemble, primitive_dim_exact};
use floercas::par::{set_exec, Exec};

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn assemble(c: &mut Criterion) {
    let mut group = c.benchmark_group("hf_assemble");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::new(name, 5), &5u32, |b, &g| {
            set_exec(mode);
            b.iter(|| hf_assemble(g));
        });
    }
    group.finish();
}

fn primitive(c: &mut Criterion) {
    let mut group = c.benchmark_group("primitive_dim_exact");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(
            BenchmarkId::new(name, "g4k4"),
            &(4u32, 4u32),
            |b, &(g, k)| {
                set_exec(mode);
                b.iter(|| primitive_dim_exact(g, k));
            },
        );
    }
    group.finish();
}

fn suite(c: &mut Criterion) {
    let mut group = c.benchmark_group("check");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::new(name, 3), |b| {
            set_exec(mode);
            b.iter(|| check::run(Limits { max_genus: 3 }));
        });
    }
    group.finish();
}

criterion_group!(benches, assemble, primitive, suite);
criterion_main!(benches);
