use std::time::Instant;

use sl3analysis::chebops::{
    bracelet_combo, cut_cable_combo, thick_combo, verify_band, verify_bracelet,
};

#[test]
#[ignore = "timing probe"]
fn probe_thick() {
    for k in 2..=4 {
        let t0 = Instant::now();
        let c = thick_combo(k).expect("reduces");
        println!("thick {}: {} terms in {:?}", k, c.len(), t0.elapsed());
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_cut_cable() {
    for k in 1..=5 {
        let t0 = Instant::now();
        let c = cut_cable_combo(k).expect("reduces");
        println!("cut cable {}: {} terms in {:?}", k, c.len(), t0.elapsed());
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_bracelet() {
    for k in 2..=4 {
        let t0 = Instant::now();
        let c = bracelet_combo(k).expect("reduces");
        println!("bracelet {}: {} terms in {:?}", k, c.len(), t0.elapsed());
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_verify() {
    for k in 3..=4 {
        let t0 = Instant::now();
        let ok = verify_bracelet(k).expect("reduces");
        println!("verify bracelet {} = {} in {:?}", k, ok, t0.elapsed());
        let t0 = Instant::now();
        let ok = verify_band(k).expect("reduces");
        println!("verify band {} = {} in {:?}", k, ok, t0.elapsed());
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_enumeration() {
    use sl3analysis::dimension::dim_invariants;
    use sl3analysis::enumeration::enumerate_basis_word;
    use sl3core::Color;
    let words: &[&str] = &[
        "bwbwbw",
        "wwwbbb",
        "bwbwbwbw",
        "wwbbwwbb",
        "wwwwbbbb",
        "wwwbbbwb",
        "bbbbbbbb",
        "wwwwwwbbb",
    ];
    for s in words {
        let w: Vec<Color> = s
            .chars()
            .map(|c| if c == 'w' { Color::White } else { Color::Black })
            .collect();
        let t0 = Instant::now();
        match enumerate_basis_word(&w) {
            Ok(cat) => println!(
                "{}: dim {} -> {} webs in {:?}",
                s,
                dim_invariants(&w),
                cat.len(),
                t0.elapsed()
            ),
            Err(e) => println!("{}: ERROR {} after {:?}", s, e, t0.elapsed()),
        }
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_red_graphs() {
    use sl3analysis::corpus::unclasp_reading;
    use sl3analysis::chebops::thick_web;
    use sl3analysis::redgraphs::FaceDual;
    for k in [2usize, 3] {
        let w = unclasp_reading(&thick_web(k).expect("thickens"));
        let t0 = Instant::now();
        let ctx = FaceDual::build(&w).expect("builds");
        println!(
            "thick {}: {} interior faces ({:?})",
            k,
            ctx.interior_count(),
            t0.elapsed()
        );
        let t0 = Instant::now();
        let exact = ctx.exact_red_graphs().expect("searches");
        println!("  exhaustive exact: {} graphs in {:?}", exact.len(), t0.elapsed());
        for g in &exact {
            println!(
                "    faces {:?} girth {:?} cycle {}",
                g.faces,
                ctx.girth(g),
                ctx.has_cycle(g)
            );
        }
        let t0 = Instant::now();
        let cycles = ctx.exact_cycle_graphs();
        println!("  cycle-seeded exact: {} graphs in {:?}", cycles.len(), t0.elapsed());
        for g in &cycles {
            let pairings = ctx.enumerate_pairings(g);
            println!("    faces {:?} pairings {}", g.faces, pairings.len());
            for p in &pairings {
                match ctx.reduce_by_red_graph(g, p) {
                    Ok(combo) => {
                        for (d, c) in combo.iter() {
                            println!(
                                "      -> web[{} int, {} edges] y={} coeff {}",
                                d.internal_vertex_count(),
                                d.edge_count(),
                                d.has_boundary_y(),
                                c
                            );
                        }
                    }
                    Err(e) => println!("      -> ERROR {e}"),
                }
            }
        }
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_a1() {
    use sl3analysis::chebops::{thick_web, unclasp_reading};
    use sl3engine::quantum::{coefficient_at, dominant_path};
    let t3 = unclasp_reading(&thick_web(3).unwrap());
    let jt3 = dominant_path(&t3).unwrap();
    println!("J(thick3) = {:?}", jt3);
    // Find the rotation of the unclasped cup-nested hexagon whose reading is
    // compatible with the thick-web reading (same signature word).
    let wb = sl3analysis::corpus::w_cup_b();
    let want = t3.boundary_word();
    for r in 0..want.len() {
        let cand = wb.unclasp().rotate_marked(r);
        if cand.boundary_word() == want {
            let j = dominant_path(&cand).unwrap();
            let t0 = std::time::Instant::now();
            let c = coefficient_at(&t3, &j).unwrap();
            println!("rot {r}: J(WuB) = {:?}\n  coeff = {} ({:?})", j, c, t0.elapsed());
        }
    }
}

#[test]
#[ignore = "timing probe"]
fn probe_all_pairings() {
    use sl3analysis::chebops::{thick_web, unclasp_reading};
    use sl3analysis::redgraphs::FaceDual;
    let t3 = unclasp_reading(&thick_web(3).unwrap());
    let dual = FaceDual::build(&t3).unwrap();
    let graphs = dual.exact_red_graphs().unwrap();
    println!("exhaustive exact graphs: {}", graphs.len());
    let t0 = std::time::Instant::now();
    let mut no_y_total = 0usize;
    let mut paired_graphs = 0usize;
    for (i, g) in graphs.iter().enumerate() {
        let ps = dual.enumerate_pairings(g);
        if ps.is_empty() {
            continue;
        }
        paired_graphs += 1;
        for p in &ps {
            let combo = dual.reduce_by_red_graph(g, p).unwrap();
            for (d, c) in combo.iter() {
                if !d.has_boundary_y() {
                    no_y_total += 1;
                    println!(
                        "  graph #{i} {:?}: no-Y web [{} int, {} edges] coeff {}",
                        g.faces,
                        d.internal_vertex_count(),
                        d.edge_count(),
                        c
                    );
                }
            }
        }
        if t0.elapsed().as_secs() > 420 {
            println!("  ... aborting sweep at graph #{i} after {:?}", t0.elapsed());
            break;
        }
    }
    println!(
        "paired graphs {paired_graphs}, total no-Y occurrences {no_y_total}, elapsed {:?}",
        t0.elapsed()
    );
}
