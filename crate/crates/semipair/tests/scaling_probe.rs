use std::time::Instant;

use semipair::block::{build_block_tree, compute_beo, decompose};
use semipair::generate::random_block_graph;
use semipair::solver::solve_block_graph;

#[test]
#[ignore]
fn probe() {
    for &n in &[10_000usize, 100_000, 1_000_000] {
        let g = random_block_graph(7, n, 4).unwrap();
        let t = Instant::now();
        let d = decompose(&g).unwrap();
        let t_dec = t.elapsed().as_secs_f64() * 1e3;
        std::hint::black_box(d.blocks.len());

        let t = Instant::now();
        let o = compute_beo(&g).unwrap();
        let t_beo = t.elapsed().as_secs_f64() * 1e3;

        let t = Instant::now();
        let tree = build_block_tree(&g, &o).unwrap();
        let t_tree = t.elapsed().as_secs_f64() * 1e3;
        std::hint::black_box(tree.order.len());

        let t = Instant::now();
        let s = solve_block_graph(&g).unwrap();
        let t_all = t.elapsed().as_secs_f64() * 1e3;
        std::hint::black_box(s.size());

        println!(
            "n={n}: decompose {t_dec:.2}ms beo(total) {t_beo:.2}ms tree {t_tree:.2}ms solve(e2e) {t_all:.2}ms"
        );
    }
}
