use std::time::Instant;

fn main() {
    use lappoly::generate;
    use lappoly::matching::{laplacian_matching_polynomial, match_counts};
    use lappoly::spectra::{char_poly, signless_laplacian};
    use lappoly::tu::tu_weight_sums;
    use lappoly::roots::real_roots;

    // worst-case n=6 graph: K6
    let k6 = generate::complete(6).unwrap();
    let t = Instant::now();
    for _ in 0..20 { let _ = laplacian_matching_polynomial(&k6); }
    println!("beta(K6): {:?}/iter", t.elapsed() / 20);

    let s = k6.subdivision();
    let t = Instant::now();
    for _ in 0..20 { let _ = match_counts(s.graph()); }
    println!("p(S_K6, .): {:?}/iter", t.elapsed() / 20);

    let t = Instant::now();
    for _ in 0..20 { let _ = tu_weight_sums(&k6); }
    println!("tu sums K6: {:?}/iter", t.elapsed() / 20);

    let k7 = generate::complete(7).unwrap();
    let t = Instant::now();
    for _ in 0..100 { let _ = laplacian_matching_polynomial(&k7); }
    println!("beta(K7): {:?}/iter", t.elapsed() / 100);

    let t = Instant::now();
    for _ in 0..100 { let _ = char_poly(&signless_laplacian(&k7)); }
    println!("phiQ(K7): {:?}/iter", t.elapsed() / 100);

    let beta7 = laplacian_matching_polynomial(&k7);
    let t = Instant::now();
    for _ in 0..20 { let _ = real_roots(&beta7, 1e-10).unwrap(); }
    println!("roots(beta K7): {:?}/iter", t.elapsed() / 20);

    let g9 = generate::random_graph(9, 0.5, 1).unwrap();
    let beta9 = laplacian_matching_polynomial(&g9);
    let t = Instant::now();
    for _ in 0..20 { let _ = real_roots(&beta9, 1e-10).unwrap(); }
    println!("roots(beta n9): {:?}/iter", t.elapsed() / 20);

    // subdivision check cost at n=6 (criterion-1-like pair)
    let t = Instant::now();
    for _ in 0..20 { let _ = lappoly::matching::beta_via_subdivision(&k6, &[0, 2]).unwrap(); }
    println!("beta_via_subdivision(K6, W2): {:?}/iter", t.elapsed() / 20);

    // fibers at n=5
    let k5 = generate::complete(5).unwrap();
    let t = Instant::now();
    for _ in 0..5 { let _ = lappoly::tu::fiber_size_check_all(&k5); }
    println!("fibers(K5): {:?}/iter", t.elapsed() / 5);
}
