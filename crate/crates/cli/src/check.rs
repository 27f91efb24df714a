//! The bundled verification suite behind `salv check`: exhaustive invariant
//! sweeps over small systems, seeded random sampling over larger ones.
//!
//! Checks are independent; they are partitioned over worker threads (bounded
//! by `SALV_THREADS`) and reported in a fixed order regardless of schedule.
//! Every check derives its RNG from the suite seed and its own index, so a
//! given `--seed` reproduces exactly the same samples at any thread count.

use std::collections::BTreeSet;
use std::sync::mpsc;
use std::thread;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use salv_core::arrangement::{Arrangement, Chamber};
use salv_core::chamber::{ChamberComplex, Preset};
use salv_core::coxeter::{Bond, CoxeterMatrix, CoxeterSystem, Elem, GroupOrder, TypeSubset};
use salv_core::homology::{
    homology, rank_over_rationals, smith_normal_form, ChainComplex, IntMatrix,
};
use salv_core::salvetti::{
    build_sal, geometric_leq, h1_from_presentation, phi, pi1_presentation, quotient_complex,
    quotient_image, sal_leq, sal_order_complex, sal_pairs, translate_cell, two_cell_boundary,
};

use crate::spec::{parse_spec_str, realize, serialize_spec};

pub struct CheckOutcome {
    pub name: &'static str,
    pub error: Option<String>,
}

type Check = fn(&mut StdRng) -> Result<(), String>;

const CHECKS: &[(&str, Check)] = &[
    ("spec-roundtrip", check_spec_roundtrip),
    ("word-engine", check_word_engine),
    ("enumeration-counts", check_enumeration_counts),
    ("descent-census", check_descent_census),
    ("face-poset", check_face_poset),
    ("separation", check_separation),
    ("projection", check_projection),
    ("phi-order-reversal", check_phi),
    ("free-action", check_free_action),
    ("homology-goldens", check_homology_goldens),
    ("affine-quotient", check_affine_quotient),
    ("smith-normal-form", check_snf),
    ("presentation", check_presentation),
    ("truncation-and-warnings", check_truncation),
];

/// Worker count: `SALV_THREADS` when set to a positive integer, otherwise
/// the machine's available parallelism.
pub fn thread_budget() -> usize {
    std::env::var("SALV_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

pub fn run_all(seed: u64) -> Vec<CheckOutcome> {
    let workers = thread_budget().clamp(1, CHECKS.len());
    let (tx, rx) = mpsc::channel::<(usize, Result<(), String>)>();
    thread::scope(|scope| {
        for w in 0..workers {
            let tx = tx.clone();
            scope.spawn(move || {
                for (idx, (_, run)) in CHECKS.iter().enumerate() {
                    if idx % workers != w {
                        continue;
                    }
                    let mut rng =
                        StdRng::seed_from_u64(seed ^ (idx as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
                    let _ = tx.send((idx, run(&mut rng)));
                }
            });
        }
    });
    drop(tx);
    let mut slots: Vec<Option<Result<(), String>>> = (0..CHECKS.len()).map(|_| None).collect();
    for (idx, result) in rx {
        slots[idx] = Some(result);
    }
    CHECKS
        .iter()
        .zip(slots)
        .map(|((name, _), slot)| CheckOutcome {
            name,
            error: slot.expect("every check reports").err(),
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn system(table: &[Vec<u64>]) -> CoxeterSystem {
    CoxeterSystem::new(CoxeterMatrix::from_table(table).expect("built-in table"))
}

fn interval(m: u64) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).expect("built-in bond"));
    ChamberComplex::preset(Preset::Interval, sys).expect("built-in chamber")
}

fn simplex(labels: &[u64]) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::linear(labels).expect("built-in bonds"));
    ChamberComplex::preset(Preset::Simplex, sys).expect("built-in chamber")
}

fn affine_a2() -> ChamberComplex {
    let sys = system(&[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]);
    ChamberComplex::preset(Preset::Simplex, sys).expect("built-in chamber")
}

fn random_elem(sys: &CoxeterSystem, rng: &mut StdRng) -> Elem {
    let len = rng.random_range(0..=10usize);
    let word: Vec<u8> = (0..len)
        .map(|_| rng.random_range(0..sys.rank() as u8))
        .collect();
    sys.reduce(&word).expect("letters are in range")
}

const SHIPPED: &[(&str, &str)] = &[
    ("s3_circle", include_str!("../../../arrangements/s3_circle.toml")),
    ("i2_4_circle", include_str!("../../../arrangements/i2_4_circle.toml")),
    ("i2_5_circle", include_str!("../../../arrangements/i2_5_circle.toml")),
    ("a3_sphere", include_str!("../../../arrangements/a3_sphere.toml")),
    ("b3_sphere", include_str!("../../../arrangements/b3_sphere.toml")),
    ("h3_sphere", include_str!("../../../arrangements/h3_sphere.toml")),
    ("affine_a2", include_str!("../../../arrangements/affine_a2.toml")),
    ("infinite_dihedral", include_str!("../../../arrangements/infinite_dihedral.toml")),
    ("rank1_halfline", include_str!("../../../arrangements/rank1_halfline.toml")),
];

fn check_spec_roundtrip(_: &mut StdRng) -> Result<(), String> {
    for (name, text) in SHIPPED {
        let spec = parse_spec_str(text).map_err(|e| format!("{name}: {e}"))?;
        let again = parse_spec_str(&serialize_spec(&spec))
            .map_err(|e| format!("{name}: reparse failed: {e}"))?;
        ensure(again == spec, || format!("{name}: round-trip changed the spec"))?;
        realize(&spec).map_err(|e| format!("{name}: does not validate: {e}"))?;
    }
    Ok(())
}

fn check_word_engine(rng: &mut StdRng) -> Result<(), String> {
    let tables: Vec<Vec<Vec<u64>>> = vec![
        vec![vec![1, 3], vec![3, 1]],
        vec![vec![1, 0], vec![0, 1]],
        vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
        vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]],
        vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
    ];
    for table in &tables {
        let sys = system(table);
        for _ in 0..200 {
            let (a, b, c) = (
                random_elem(&sys, rng),
                random_elem(&sys, rng),
                random_elem(&sys, rng),
            );
            let assoc_l = sys.multiply(&sys.multiply(&a, &b), &c);
            let assoc_r = sys.multiply(&a, &sys.multiply(&b, &c));
            ensure(assoc_l == assoc_r, || format!("associativity: ({a})({b})({c})"))?;
            ensure(sys.reduce(a.word()).expect("canonical") == a, || {
                format!("idempotence: {a}")
            })?;
            ensure(sys.multiply(&a, &sys.inverse(&a)).is_identity(), || {
                format!("inverse: {a}")
            })?;
            ensure(sys.inversion_set(&a).len() == a.len(), || {
                format!("inversion count: {a}")
            })?;
        }
    }
    Ok(())
}

fn check_enumeration_counts(_: &mut StdRng) -> Result<(), String> {
    let mut cases: Vec<(Vec<Vec<u64>>, usize)> = (2..=6u64)
        .map(|m| (vec![vec![1, m], vec![m, 1]], 2 * m as usize))
        .collect();
    cases.push((vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]], 24));
    cases.push((vec![vec![1, 4, 2], vec![4, 1, 3], vec![2, 3, 1]], 48));
    cases.push((vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]], 120));
    for (table, expected) in &cases {
        let sys = system(table);
        let listed = sys
            .enumerate(sys.full_set(), None)
            .map_err(|e| e.to_string())?;
        ensure(listed.len() == *expected, || {
            format!("search found {} elements, expected {expected}", listed.len())
        })?;
        match sys.parabolic_order(sys.full_set()) {
            GroupOrder::Finite(n) => ensure(n == (*expected).into(), || {
                format!("classification says {n}, expected {expected}")
            })?,
            GroupOrder::Infinite => return Err("classified a finite group as infinite".into()),
        }
    }
    Ok(())
}

fn check_descent_census(_: &mut StdRng) -> Result<(), String> {
    use salv_core::coxeter::Side;
    for table in [
        vec![vec![1, 5], vec![5, 1]],
        vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
    ] {
        let sys = system(&table);
        for w in sys.enumerate(sys.full_set(), None).map_err(|e| e.to_string())? {
            let right = sys.descents(&w, Side::Right);
            let left = sys.descents(&w, Side::Left);
            let winv = sys.inverse(&w);
            for s in 0..sys.rank() as u8 {
                let drops = sys.mul_gen(&w, s).len() < w.len();
                ensure(right.contains(s) == drops, || {
                    format!("right descent {s} of {w}")
                })?;
                let drops_left = sys.mul_gen(&winv, s).len() < winv.len();
                ensure(left.contains(s) == drops_left, || {
                    format!("left descent {s} of {w}")
                })?;
            }
        }
    }
    Ok(())
}

fn check_face_poset(_: &mut StdRng) -> Result<(), String> {
    // Order axioms, exhaustively on the rank-2 poset.
    let cc = interval(4);
    let arr = Arrangement::new(&cc);
    let poset = arr.build_faces(None).map_err(|e| e.to_string())?;
    let n = poset.len();
    for a in 0..n {
        ensure(arr.face_leq(poset.face(a), poset.face(a)), || {
            format!("reflexivity at {}", poset.face(a))
        })?;
        for b in 0..n {
            let ab = arr.face_leq(poset.face(a), poset.face(b));
            let ba = arr.face_leq(poset.face(b), poset.face(a));
            if a != b {
                ensure(!(ab && ba), || {
                    format!("antisymmetry at {} vs {}", poset.face(a), poset.face(b))
                })?;
            }
            for c in 0..n {
                if ab && arr.face_leq(poset.face(b), poset.face(c)) {
                    ensure(arr.face_leq(poset.face(a), poset.face(c)), || {
                        format!(
                            "transitivity at {} {} {}",
                            poset.face(a),
                            poset.face(b),
                            poset.face(c)
                        )
                    })?;
                }
            }
        }
    }
    // Coset count formula on a spread of systems.
    let mut complexes = vec![interval(2), interval(3), interval(5), simplex(&[3, 3])];
    complexes.push(simplex(&[4, 3]));
    for cc in &complexes {
        let sys = cc.system();
        let order = sys
            .parabolic_order(sys.full_set())
            .to_u64()
            .expect("finite built-ins") as usize;
        let expected: usize = cc
            .acceptable()
            .iter()
            .map(|&t| {
                order
                    / sys
                        .parabolic_order(t)
                        .to_u64()
                        .expect("acceptable subsets are spherical") as usize
            })
            .sum();
        let arr = Arrangement::new(cc);
        let poset = arr.build_faces(None).map_err(|e| e.to_string())?;
        ensure(poset.len() == expected, || {
            format!("face count {} differs from coset count {expected}", poset.len())
        })?;
        ensure(poset.chambers().len() == order, || {
            "chamber count is not the group order".into()
        })?;
    }
    Ok(())
}

fn check_separation(rng: &mut StdRng) -> Result<(), String> {
    // Exhaustive on I₂(4): every triple of the 8 chambers.
    let cc = interval(4);
    let arr = Arrangement::new(&cc);
    let chambers = arr.build_faces(None).map_err(|e| e.to_string())?.chambers();
    for c1 in &chambers {
        for c2 in &chambers {
            let s12 = arr.separating(c1, c2);
            ensure(s12 == arr.separating(c2, c1), || {
                format!("symmetry at ({c1}, {c2})")
            })?;
            ensure(s12.len() == arr.distance(c1, c2), || {
                format!("gallery distance vs wall count at ({c1}, {c2})")
            })?;
            for c3 in &chambers {
                let relayed: BTreeSet<_> = s12
                    .symmetric_difference(&arr.separating(c2, c3))
                    .cloned()
                    .collect();
                ensure(arr.separating(c1, c3) == relayed, || {
                    format!("triple identity at ({c1}, {c2}, {c3})")
                })?;
            }
        }
    }
    // Sampled triples on the rank-3 sphere.
    let cc = simplex(&[3, 3]);
    let arr = Arrangement::new(&cc);
    let chambers = arr.build_faces(None).map_err(|e| e.to_string())?.chambers();
    for _ in 0..2000 {
        let pick = |rng: &mut StdRng| &chambers[rng.random_range(0..chambers.len())];
        let (c1, c2, c3) = (pick(rng), pick(rng), pick(rng));
        let relayed: BTreeSet<_> = arr
            .separating(c1, c2)
            .symmetric_difference(&arr.separating(c2, c3))
            .cloned()
            .collect();
        ensure(arr.separating(c1, c3) == relayed, || {
            format!("triple identity at ({c1}, {c2}, {c3})")
        })?;
    }
    Ok(())
}

fn check_projection(rng: &mut StdRng) -> Result<(), String> {
    for (cc, samples) in [(interval(4), None), (simplex(&[3, 3]), Some(500))] {
        let arr = Arrangement::new(&cc);
        let poset = arr.build_faces(None).map_err(|e| e.to_string())?;
        let chambers = poset.chambers();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        match samples {
            None => {
                for f in 0..poset.len() {
                    for c in 0..chambers.len() {
                        pairs.push((f, c));
                    }
                }
            }
            Some(k) => {
                for _ in 0..k {
                    pairs.push((
                        rng.random_range(0..poset.len()),
                        rng.random_range(0..chambers.len()),
                    ));
                }
            }
        }
        for (fi, ci) in pairs {
            let f = poset.face(fi);
            let c = &chambers[ci];
            let projected = arr.project(f, c);
            let mut nearest: Vec<&Chamber> = Vec::new();
            let mut best = usize::MAX;
            for d in &chambers {
                if !arr.face_beneath_chamber(f, d) {
                    continue;
                }
                let dist = arr.distance(d, c);
                if dist < best {
                    best = dist;
                    nearest = vec![d];
                } else if dist == best {
                    nearest.push(d);
                }
            }
            ensure(nearest.len() == 1, || format!("argmin not unique at ({f}, {c})"))?;
            ensure(nearest[0] == &projected, || {
                format!("projection is not the argmin at ({f}, {c})")
            })?;
        }
        // Tower law: exhaustive when small, sampled otherwise.
        let mut triples: Vec<(usize, usize, usize)> = Vec::new();
        match samples {
            None => {
                for f in 0..poset.len() {
                    for g in 0..poset.len() {
                        for c in 0..chambers.len() {
                            triples.push((f, g, c));
                        }
                    }
                }
            }
            Some(k) => {
                for _ in 0..k {
                    triples.push((
                        rng.random_range(0..poset.len()),
                        rng.random_range(0..poset.len()),
                        rng.random_range(0..chambers.len()),
                    ));
                }
            }
        }
        for (fi, gi, ci) in triples {
            let (f, g, c) = (poset.face(fi), poset.face(gi), &chambers[ci]);
            if !arr.face_leq(f, g) {
                continue;
            }
            ensure(
                arr.project(g, &arr.project(f, c)) == arr.project(g, c),
                || format!("tower law at ({f}, {g}, {c})"),
            )?;
        }
    }
    Ok(())
}

fn check_phi(rng: &mut StdRng) -> Result<(), String> {
    for (cc, samples) in [(interval(3), None), (simplex(&[3, 3]), Some(3000))] {
        let arr = Arrangement::new(&cc);
        let faces = arr.build_faces(None).map_err(|e| e.to_string())?;
        let pairs = sal_pairs(&arr, &faces);
        let poset = build_sal(&cc).map_err(|e| e.to_string())?;
        ensure(pairs.len() == poset.len(), || {
            format!("pair model has {} cells, group model {}", pairs.len(), poset.len())
        })?;
        let images: Vec<_> = pairs
            .iter()
            .map(|p| phi(&arr, p).expect("pairs are well-formed"))
            .collect();
        let distinct: BTreeSet<_> = images.iter().collect();
        ensure(distinct.len() == pairs.len(), || "phi is not injective".into())?;
        let sys = cc.system();
        let mut indices: Vec<(usize, usize)> = Vec::new();
        match samples {
            None => {
                for a in 0..pairs.len() {
                    for b in 0..pairs.len() {
                        indices.push((a, b));
                    }
                }
            }
            Some(k) => {
                for _ in 0..k {
                    indices.push((
                        rng.random_range(0..pairs.len()),
                        rng.random_range(0..pairs.len()),
                    ));
                }
            }
        }
        for (a, b) in indices {
            let geometric = geometric_leq(&arr, &pairs[a], &pairs[b]).expect("pairs well-formed");
            let algebraic = sal_leq(sys, &images[b], &images[a]);
            ensure(geometric == algebraic, || {
                format!(
                    "order reversal at (({}, {}), ({}, {}))",
                    pairs[a].0, pairs[a].1, pairs[b].0, pairs[b].1
                )
            })?;
        }
    }
    Ok(())
}

fn check_free_action(_: &mut StdRng) -> Result<(), String> {
    for cc in [interval(3), interval(4)] {
        let sys = cc.system();
        let poset = build_sal(&cc).map_err(|e| e.to_string())?;
        let elems = sys
            .enumerate(sys.full_set(), None)
            .map_err(|e| e.to_string())?;
        for w in elems.iter().filter(|w| !w.is_identity()) {
            for cell in poset.cells() {
                ensure(&translate_cell(sys, w, cell) != cell, || {
                    format!("{w} fixes a cell")
                })?;
            }
        }
        let quotient = quotient_complex(&cc).counts();
        let total = sal_order_complex(&cc, &poset).counts();
        ensure(quotient.len() == total.len(), || "dimension mismatch".into())?;
        for (q, t) in quotient.iter().zip(&total) {
            ensure(q * elems.len() == *t, || {
                format!("orbit counts: {quotient:?} vs {total:?}")
            })?;
        }
    }
    Ok(())
}

fn check_homology_goldens(_: &mut StdRng) -> Result<(), String> {
    let betti = |chain: &ChainComplex| homology(chain).betti_vector();
    for m in 2..=4u64 {
        let cc = interval(m);
        let poset = build_sal(&cc).map_err(|e| e.to_string())?;
        let sc = sal_order_complex(&cc, &poset);
        let chain = ChainComplex::from_complex(&sc).map_err(|e| e.to_string())?;
        ensure(betti(&chain) == vec![1, 2 * m as usize + 1], || {
            format!("complement of I2({m})")
        })?;
    }
    for m in 2..=6u64 {
        let chain =
            ChainComplex::from_complex(&quotient_complex(&interval(m))).map_err(|e| e.to_string())?;
        ensure(betti(&chain) == vec![1, 2], || format!("quotient of I2({m})"))?;
    }
    let cc = simplex(&[3, 3]);
    let arr = Arrangement::new(&cc);
    let poset = arr.build_faces(None).map_err(|e| e.to_string())?;
    let manifold = arr.manifold_complex(&poset).map_err(|e| e.to_string())?;
    let chain = ChainComplex::from_complex(&manifold).map_err(|e| e.to_string())?;
    ensure(betti(&chain) == vec![1, 0, 1], || "manifold over A3".into())?;
    let walls = arr.walls_subcomplex(&poset).map_err(|e| e.to_string())?;
    let chain = ChainComplex::from_complex(&walls).map_err(|e| e.to_string())?;
    ensure(betti(&chain) == vec![1, 23], || "walls of A3".into())?;
    // Euler characteristic two ways on I₂(5).
    let cc = interval(5);
    let poset = build_sal(&cc).map_err(|e| e.to_string())?;
    let via_cells: i64 = poset
        .cells()
        .iter()
        .map(|c| if c.dim() % 2 == 0 { 1 } else { -1 })
        .sum();
    let via_chains = sal_order_complex(&cc, &poset).euler();
    ensure(via_cells == -10 && via_chains == -10, || {
        format!("euler of I2(5): cells {via_cells}, chains {via_chains}")
    })?;
    Ok(())
}

fn check_affine_quotient(_: &mut StdRng) -> Result<(), String> {
    let cc = affine_a2();
    let q = quotient_complex(&cc);
    ensure(q.counts() == vec![7, 42, 36], || {
        format!("affine quotient counts {:?}", q.counts())
    })?;
    let chain = ChainComplex::from_complex(&q).map_err(|e| e.to_string())?;
    let h = homology(&chain);
    let h1 = h1_from_presentation(&pi1_presentation(&cc));
    ensure(h.degrees[1].betti == h1.betti, || {
        format!("H1 betti {} vs abelianized {}", h.degrees[1].betti, h1.betti)
    })?;
    ensure(h.degrees[1].torsion == h1.torsion, || "H1 torsion mismatch".into())?;
    ensure(h.euler_from_betti() == 1, || "affine quotient euler".into())?;
    Ok(())
}

fn check_snf(rng: &mut StdRng) -> Result<(), String> {
    for _ in 0..300 {
        let rows = rng.random_range(1..=6usize);
        let cols = rng.random_range(1..=6usize);
        let mut m = IntMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, rng.random_range(-9..=9i64));
            }
        }
        let snf = smith_normal_form(&m);
        for pair in snf.factors.windows(2) {
            ensure((&pair[1] % &pair[0]).bits() == 0, || {
                format!("divisibility chain broken: {} ∤ {}", pair[0], pair[1])
            })?;
        }
        ensure(snf.rank == rank_over_rationals(&m), || {
            "rank disagrees with fraction-free elimination".into()
        })?;
        // Permute rows and columns; the invariant factors must not move.
        let mut p = IntMatrix::zero(rows, cols);
        let mut row_order: Vec<usize> = (0..rows).collect();
        let mut col_order: Vec<usize> = (0..cols).collect();
        for i in (1..rows).rev() {
            row_order.swap(i, rng.random_range(0..=i));
        }
        for j in (1..cols).rev() {
            col_order.swap(j, rng.random_range(0..=j));
        }
        for (i2, &i) in row_order.iter().enumerate() {
            for (j2, &j) in col_order.iter().enumerate() {
                p.set(i2, j2, m.get(i, j));
            }
        }
        ensure(smith_normal_form(&p).factors == snf.factors, || {
            "invariant factors moved under permutation".into()
        })?;
    }
    Ok(())
}

fn check_presentation(_: &mut StdRng) -> Result<(), String> {
    let p = pi1_presentation(&simplex(&[3, 3]));
    ensure(
        p.to_text()
            == "generators: e1 e2 e3\n\
                e1 e2 e1 = e2 e1 e2\n\
                e1 e3 = e3 e1\n\
                e2 e3 e2 = e3 e2 e3\n",
        || "A3 presentation text".into(),
    )?;
    for m in 2..=6u64 {
        let p = pi1_presentation(&interval(m));
        ensure(p.generators == 2 && p.relations.is_empty(), || {
            format!("I2({m}) should present a free group")
        })?;
    }
    // Boundary walks of every 2-cell close up and abelianize to the braid
    // relator, over every base chamber of the rank-3 sphere.
    let cc = simplex(&[3, 3]);
    let sys = cc.system();
    let elems = sys
        .enumerate(sys.full_set(), None)
        .map_err(|e| e.to_string())?;
    for ty in cc.acceptable().iter().filter(|t| t.len() == 2) {
        for w in &elems {
            let walk = two_cell_boundary(&cc, *ty, w).map_err(|e| e.to_string())?;
            let mut at = w.clone();
            for edge in &walk {
                ensure(
                    if edge.inverted {
                        sys.mul_gen(&edge.base, edge.gen) == at
                    } else {
                        edge.base == at
                    },
                    || format!("boundary walk breaks at ({ty}, {w})"),
                )?;
                at = if edge.inverted {
                    edge.base.clone()
                } else {
                    sys.mul_gen(&edge.base, edge.gen)
                };
            }
            ensure(at == *w, || format!("boundary walk does not close at ({ty}, {w})"))?;
            let gens: Vec<u8> = ty.iter().collect();
            let m = match sys.matrix().bond(gens[0] as usize, gens[1] as usize) {
                Bond::Finite(m) => m as usize,
                Bond::Infinite => return Err(format!("infinite bond in a 2-cell type {ty}")),
            };
            let image = quotient_image(&walk);
            let positive: Vec<(u8, bool)> = (0..m)
                .map(|k| (gens[k % 2], false))
                .chain((0..m).rev().map(|k| (gens[1 - k % 2], true)))
                .collect();
            ensure(image == positive, || {
                format!("quotient relator at ({ty}, {w})")
            })?;
        }
    }
    Ok(())
}

fn check_truncation(_: &mut StdRng) -> Result<(), String> {
    let cc = {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(0).expect("infinite bond"));
        ChamberComplex::preset(Preset::Interval, sys).expect("interval chamber")
    };
    let arr = Arrangement::new(&cc);
    ensure(arr.build_faces(None).is_err(), || {
        "unbounded enumeration of an infinite group must refuse".into()
    })?;
    let poset = arr.build_faces(Some(6)).map_err(|e| e.to_string())?;
    ensure(poset.truncated(), || "bounded poset should say it is truncated".into())?;
    ensure(poset.len() == 27, || {
        format!("truncated face count {}", poset.len())
    })?;
    ensure(arr.manifold_complex(&poset).is_err(), || {
        "homology over a truncated poset must refuse".into()
    })?;

    let rank1 = {
        let sys = system(&[vec![1]]);
        ChamberComplex::validate(sys, &[TypeSubset::singleton(0)], false)
            .expect("lenient validation")
    };
    ensure(!rank1.warnings().is_empty(), || {
        "half-line chamber should warn in lenient mode".into()
    })?;
    let chain =
        ChainComplex::from_complex(&quotient_complex(&rank1)).map_err(|e| e.to_string())?;
    ensure(homology(&chain).betti_vector() == vec![1, 1], || {
        "half-line quotient is a circle".into()
    })?;
    Ok(())
}
