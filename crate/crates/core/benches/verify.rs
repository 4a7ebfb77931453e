use criterion::{criterion_group, criterion_main, Criterion};

use stablemap_cohomology::par::Execution;
use stablemap_cohomology::pipeline::{run_suite, Suite, SuiteConfig};

fn suites(c: &mut Criterion) {
    let config = SuiteConfig {
        ring_n_max: 6,
        betti_n_max: 12,
    };
    let mut group = c.benchmark_group("verify_all");
    group.sample_size(10);
    for (name, execution) in [
        ("sequential", Execution::Sequential),
        ("parallel", Execution::Parallel),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                let report = run_suite(Suite::All, config, execution).expect("suite runs");
                assert!(report.pass());
            })
        });
    }
    group.finish();
}

criterion_group!(benches, suites);
criterion_main!(benches);
