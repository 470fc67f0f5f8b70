use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use intmetric::enumeration::{count_metric_with, SearchConfig};
use intmetric::Exec;

fn serial_vs_parallel(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_metric");
    group.sample_size(10);
    for (r, n) in [(3u32, 6usize), (4, 5), (5, 5)] {
        let label = format!("r{r}_n{n}");
        group.bench_with_input(BenchmarkId::new("serial", &label), &(r, n), |b, &(r, n)| {
            let cfg = SearchConfig::serial();
            b.iter(|| count_metric_with(r, n, &cfg).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", &label), &(r, n), |b, &(r, n)| {
            let cfg = SearchConfig { exec: Exec::default(), ..SearchConfig::default() };
            b.iter(|| count_metric_with(r, n, &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, serial_vs_parallel);
criterion_main!(benches);
