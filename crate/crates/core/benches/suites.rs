use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qlab_core::exec::{par_map, Execution};
use qlab_core::finalg::{make_ring, q_max, ring_family, ring_predicates};
use qlab_core::limits::exhaustive_hom_check;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn limits_exhaustive(c: &mut Criterion) {
    let mut group = c.benchmark_group("limits_exhaustive_depth2");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| exhaustive_hom_check(2, exec)));
    }
    group.finish();
}

fn finite_ring_family(c: &mut Criterion) {
    let family: Vec<String> = ring_family().into_iter().filter(|s| make_ring(s).unwrap().order() <= 16).collect();
    let mut group = c.benchmark_group("finalg_family_qmax");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                par_map(exec, &family, |spec| {
                    let r = make_ring(spec).unwrap();
                    (ring_predicates(&r), q_max(&r).unwrap().ring.order())
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, limits_exhaustive, finite_ring_family);
criterion_main!(benches);
