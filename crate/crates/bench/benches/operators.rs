use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use relsize_bench::fixtures;
use relsize_core::derived::product;
use relsize_core::kernel::{central_collection, make_kernel_context, relative_kernel};
use relsize_core::relative::{self, definitional, ps_collection, syn_collection, thick_collection};
use relsize_core::{mesh, stack_closure};

fn closure_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for fx in fixtures() {
        group.bench_with_input(BenchmarkId::new("mesh", fx.label()), &fx, |b, fx| b.iter(|| mesh(black_box(&fx.stack))));
        group.bench_with_input(BenchmarkId::new("stack_closure", fx.label()), &fx, |b, fx| {
            b.iter(|| stack_closure(black_box(&fx.stack)))
        });
        group.bench_with_input(BenchmarkId::new("product", fx.label()), &fx, |b, fx| {
            b.iter(|| product(&fx.s, black_box(&fx.f), black_box(&fx.g)).unwrap())
        });
    }
    group.finish();
}

fn relative_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("relative");
    for fx in fixtures() {
        let label = fx.label();
        group.bench_with_input(BenchmarkId::new("syn_fast", &label), &fx, |b, fx| {
            b.iter(|| relative::is_rel_syndetic(&fx.s, black_box(&fx.a), &fx.f, &fx.g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("syn_definitional", &label), &fx, |b, fx| {
            b.iter(|| definitional::is_rel_syndetic(&fx.s, black_box(&fx.a), &fx.f, &fx.g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("thick_fast", &label), &fx, |b, fx| {
            b.iter(|| relative::is_rel_thick(&fx.s, black_box(&fx.a), &fx.f, &fx.g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("syn_collection", &label), &fx, |b, fx| {
            b.iter(|| syn_collection(&fx.s, &fx.f, &fx.g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("thick_collection", &label), &fx, |b, fx| {
            b.iter(|| thick_collection(&fx.s, &fx.f, &fx.g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("ps_collection", &label), &fx, |b, fx| {
            b.iter(|| ps_collection(&fx.s, &fx.f, &fx.g).unwrap())
        });
    }
    group.finish();
}

fn kernel_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernel");
    for fx in fixtures() {
        let Ok(ctx) = make_kernel_context(&fx.s, &fx.f, &fx.g) else { continue };
        group.bench_function(BenchmarkId::new("relative_kernel", fx.label()), |b| b.iter(|| relative_kernel(&ctx)));
        group.bench_function(BenchmarkId::new("central_collection", fx.label()), |b| b.iter(|| central_collection(&ctx)));
    }
    group.finish();
}

criterion_group!(benches, closure_ops, relative_ops, kernel_ops);
criterion_main!(benches);
