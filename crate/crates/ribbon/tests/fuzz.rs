use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ribbon::RibbonGraph;

/// Random connected φ⁴ ribbon graph with up to `n_max` vertices.
fn random_graph(rng: &mut ChaCha8Rng, n_max: usize) -> RibbonGraph {
    loop {
        let n = rng.gen_range(1..=n_max);
        let vertices: Vec<Vec<(String, i8)>> = (0..n)
            .map(|v| {
                (0..4)
                    .map(|i| (format!("h{v}_{i}"), if i % 2 == 0 { 1i8 } else { -1 }))
                    .collect()
            })
            .collect();
        let mut all: Vec<(usize, usize)> =
            (0..n).flat_map(|v| (0..4).map(move |i| (v, i))).collect();
        all.shuffle(rng);
        let k = rng.gen_range(0..=2 * n);
        let pairs: Vec<(String, String)> = (0..k)
            .map(|i| {
                let (va, ia) = all[2 * i];
                let (vb, ib) = all[2 * i + 1];
                (format!("h{va}_{ia}"), format!("h{vb}_{ib}"))
            })
            .collect();
        let g = RibbonGraph::new(&vertices, &pairs).unwrap();
        if g.topology().is_ok() {
            return g; // connected (and χ sane) by construction of topology()
        }
    }
}

#[test]
fn euler_consistency_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 6);
        let t = g.topology().unwrap();
        let n = g.n_vertices() as i64;
        let i = g.internal_lines() as i64;
        let f = t.faces as i64;
        // Euler relation with the computed genus
        assert_eq!(n - i + f, 2 - 2 * t.genus as i64);
        // every half-edge lies on exactly one face
        let mut count = vec![0usize; 4 * g.n_vertices()];
        for c in &t.cycles {
            for &h in c {
                count[h] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 1));
        // broken faces exist iff external legs exist
        assert_eq!(t.broken > 0, g.external_legs() > 0);
        // φ⁴ line-count identity and degree ordering
        assert_eq!(i, 2 * n - g.external_legs() as i64 / 2);
        if g.external_legs() > 0 {
            let (d_c, d_nc) = g.degrees(4).unwrap();
            assert!(d_nc <= d_c);
            assert_eq!(d_nc == d_c, t.genus == 0 && t.broken == 1);
        }
    }
}
