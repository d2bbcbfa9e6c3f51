use std::collections::BTreeSet;
use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tritrop_cli::generate::random_coefficients;
use tritrop_cli::pipeline::{analyze_once, signature, Analysis};
use tritrop_core::classcomplex::{analyze_classes, TritangentClass};
use tritrop_core::curve11::{segre_psi, segre_psi_inverse, Curve11Param};
use tritrop_core::curve33::{d4_coeffs, CoeffMatrix, CurveGamma, D4Element};
use tritrop_core::intersect::{is_valid_perturbation, stable_intersection, stable_intersection_with, IntersectionComponent};
use tritrop_core::lifting::member_info;
use tritrop_core::tangency::Catalog;
use tritrop_core::Rat;

const RANDOM_SEEDS: [u64; 5] = [1, 2, 3, 4, 5];

/// A curve with a class of each of the partitions (0,2,1,0) and (4,2,0,0).
const LEFT: [i64; 16] =
    [-1078, -1567, -2070, -2577, -139, -748, -1482, -2230, -841, -962, -1402, -1999, -1809, -1652, -2090, -2543];

/// A curve with classes of the partitions (0,4,0,0), (8,0,0,0), (0,0,0,1) and
/// (0,0,2,0).
const RIGHT: [i64; 16] =
    [-2322, -1973, -1670, -1650, -1498, -1218, -954, -784, -818, -1192, -1677, -2177, -2233, -2634, -3063, -3587];

const PARTITIONS: [[u32; 4]; 6] = [[8, 0, 0, 0], [4, 2, 0, 0], [0, 2, 1, 0], [0, 4, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]];

/// Partitions that come with a (4b) member.
const STARRED: [[u32; 4]; 2] = [[4, 2, 0, 0], [0, 2, 1, 0]];

const DIMS: [(i8, i8, i8); 11] = [
    (0, 0, 0),
    (0, 0, 1),
    (0, 0, 2),
    (0, 1, 1),
    (1, 1, 1),
    (1, 1, 2),
    (1, 1, 3),
    (1, 2, 2),
    (2, 2, 2),
    (2, 2, 3),
    (3, 3, 3),
];

const SEGRE_TRIALS: usize = 10_000;
const RANDOM_LAMBDAS: usize = 10_000;
const NON_TRANSVERSE: usize = 100;
const PERTURBATIONS: [[i64; 2]; 5] = [[13, 1], [-7, 3], [5, -11], [-2, -17], [19, 23]];

fn table_rows(dim: i8) -> &'static [[u32; 4]] {
    match dim {
        3 => &[[8, 0, 0, 0]],
        2 => &[[4, 2, 0, 0], [0, 4, 0, 0]],
        1 => &[[0, 2, 1, 0], [0, 0, 2, 0]],
        0 => &[[0, 0, 0, 1]],
        _ => &[],
    }
}

fn matrix(h: &[i64; 16]) -> CoeffMatrix {
    CoeffMatrix::from_fn(|i, j| Rat::from_int(h[4 * i + j]))
}

struct Subject {
    name: String,
    coeffs: CoeffMatrix,
    analysis: Analysis,
    classes: Vec<TritangentClass>,
}

impl Subject {
    fn new(name: String, coeffs: CoeffMatrix) -> Subject {
        let analysis = analyze_once(&coeffs).expect("analysis");
        let classes = analyze_classes(&analysis.locus).expect("classes");
        Subject { name, coeffs, analysis, classes }
    }

    fn gamma(&self) -> &CurveGamma {
        &self.analysis.gamma
    }

    fn partitions(&self) -> Vec<Option<[u32; 4]>> {
        self.analysis.report.classes.iter().map(|c| c.lifting.as_ref().ok().map(|l| l.partition.0)).collect()
    }
}

struct Outcome {
    lines: Vec<String>,
    failed: usize,
}

impl Outcome {
    fn record(&mut self, n: usize, name: &str, pass: bool, detail: String) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        self.failed += !pass as usize;
        self.lines.push(format!("criterion {n:>2} {name}: {verdict} {detail}"));
    }
}

fn class_count(subjects: &[Subject]) -> (bool, String) {
    let counts: Vec<usize> = subjects.iter().map(|s| s.classes.len()).collect();
    (counts.iter().all(|&c| c == 15), format!("counts {counts:?} want 15"))
}

fn lift_totals(subjects: &[Subject]) -> (bool, String) {
    let mut bad = String::new();
    for s in subjects {
        for (c, p) in s.analysis.report.classes.iter().zip(s.partitions()) {
            let total = p.map(|p| p[0] + 2 * p[1] + 4 * p[2] + 8 * p[3]);
            if total != Some(8) {
                let _ = write!(bad, " {}#{}={:?}", s.name, c.id, c.lifting.as_ref().err());
            }
        }
    }
    (bad.is_empty(), format!("total 8 in every class{bad}"))
}

fn partition_membership(subjects: &[Subject]) -> (bool, String) {
    let mut seen = BTreeSet::new();
    let mut ok = true;
    for s in subjects {
        for p in s.partitions() {
            match p {
                Some(p) if PARTITIONS.contains(&p) => {
                    seen.insert(p);
                }
                _ => ok = false,
            }
        }
    }
    (ok, format!("seen {seen:?}"))
}

fn has_four_b(s: &Subject, class: &TritangentClass) -> bool {
    let catalog = Catalog::builtin();
    class.nonspecial.iter().any(|&i| {
        member_info(&catalog, s.gamma(), &s.analysis.locus, i)
            .map(|m| m.types.iter().any(|t| t.label == "(4b)"))
            .unwrap_or(false)
    })
}

fn partition_by_dimension(subjects: &[Subject]) -> (bool, String) {
    let mut bad = String::new();
    let mut starred = 0;
    for s in subjects {
        for (class, p) in s.classes.iter().zip(s.partitions()) {
            let dim = class.dims(&s.analysis.locus).0;
            let four_b = has_four_b(s, class);
            let ok = match p {
                Some(p) => table_rows(dim).contains(&p) && STARRED.contains(&p) == four_b,
                None => false,
            };
            starred += four_b as usize;
            if !ok {
                let _ = write!(bad, " {}#{} dim {dim} {p:?} 4b {four_b}", s.name, class.id);
            }
        }
    }
    (bad.is_empty(), format!("classes with (4b) {starred}{bad}"))
}

fn dimension_tuples(subjects: &[Subject]) -> (bool, String) {
    let mut seen = BTreeSet::new();
    let mut bad = String::new();
    for s in subjects {
        for class in &s.classes {
            let d = class.dims(&s.analysis.locus);
            if !DIMS.contains(&d) {
                let _ = write!(bad, " {}#{} {d:?}", s.name, class.id);
            }
            seen.insert(d);
        }
    }
    (bad.is_empty(), format!("witnessed {} of 11 (soft target 8) {seen:?}{bad}", seen.len()))
}

fn connectivity(subjects: &[Subject]) -> (bool, String) {
    let mut bad = String::new();
    for s in subjects {
        let locus = &s.analysis.locus;
        for class in &s.classes {
            let b = locus.components_of(&class.bounded).len();
            let ns = locus.components_of(&class.nonspecial).len();
            if b != 1 || ns != 1 {
                let _ = write!(bad, " {}#{} bounded {b} non-special {ns}", s.name, class.id);
            }
        }
    }
    (bad.is_empty(), format!("one component each{bad}"))
}

fn random_rat(rng: &mut ChaCha8Rng, span: i64) -> Rat {
    let den = rng.random_range(1..=97i64);
    Rat::new(rng.random_range(-span * den..=span * den) as i128, den as i128)
}

fn segre_round_trips() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = 0;
    for _ in 0..SEGRE_TRIALS {
        let v = [random_rat(&mut rng, 500), random_rat(&mut rng, 500), random_rat(&mut rng, 500)];
        bad += (segre_psi_inverse(&segre_psi(&v)) != v) as usize;
        let p = Curve11Param::new([random_rat(&mut rng, 500), random_rat(&mut rng, 500)], random_rat(&mut rng, 500));
        bad += (segre_psi(&segre_psi_inverse(&p)) != p) as usize;
    }
    (bad == 0, format!("{} round trips, {bad} mismatches", 2 * SEGRE_TRIALS))
}

fn bbox(g: &CurveGamma) -> [i64; 4] {
    let mut b = [i64::MAX, i64::MIN, i64::MAX, i64::MIN];
    for v in &g.vertices {
        let (x, y) = (v.point[0].to_f64().floor() as i64, v.point[1].to_f64().floor() as i64);
        b = [b[0].min(x - 20), b[1].max(x + 20), b[2].min(y - 20), b[3].max(y + 20)];
    }
    b
}

fn total(comps: &[IntersectionComponent]) -> u32 {
    comps.iter().map(|c| c.stable_mult).sum()
}

fn profile(comps: &[IntersectionComponent]) -> Vec<String> {
    let mut v: Vec<String> = comps
        .iter()
        .map(|c| {
            let mut atoms: Vec<String> = c.atoms.iter().map(|a| format!("{:?}", (a.start(), a.end()))).collect();
            atoms.sort();
            format!("{} m{}", atoms.join(";"), c.stable_mult)
        })
        .collect();
    v.sort();
    v
}

fn non_transverse(comps: &[IntersectionComponent]) -> bool {
    comps.iter().any(|c| !c.is_point() || c.stable_mult > 1 || c.points.len() > 1)
}

fn stable_intersections(subjects: &[Subject]) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut detail = String::new();
    let mut ok = true;
    for s in subjects {
        let g = s.gamma();
        let [x0, x1, y0, y1] = bbox(g);
        let span = (x1 - x0).max(y1 - y0);
        let mut wrong = 0;
        for _ in 0..RANDOM_LAMBDAS {
            let den = 7919;
            let r = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| Rat::new(rng.random_range(lo * den..hi * den) as i128, den as i128);
            let p = Curve11Param::new([r(&mut rng, x0, x1), r(&mut rng, y0, y1)], r(&mut rng, -span, span));
            wrong += (total(&stable_intersection(&p, g)) != 6) as usize;
        }
        let dirs: Vec<[i64; 2]> = PERTURBATIONS.into_iter().filter(|&d| is_valid_perturbation(g, d)).collect();
        let mut found = 0;
        let mut disagree = 0;
        let mut attempts = 0;
        while found < NON_TRANSVERSE && attempts < 100 * NON_TRANSVERSE {
            attempts += 1;
            let p = if attempts % 3 == 0 {
                let v = &g.vertices[rng.random_range(0..g.vertices.len())];
                Curve11Param::new(v.point.clone(), Rat::from_int(rng.random_range(-span..=span)))
            } else {
                let h = |rng: &mut ChaCha8Rng, lo: i64, hi: i64| Rat::new(rng.random_range(2 * lo..=2 * hi) as i128, 2);
                Curve11Param::new([h(&mut rng, x0, x1), h(&mut rng, y0, y1)], h(&mut rng, -span, span))
            };
            let base = stable_intersection(&p, g);
            if !non_transverse(&base) {
                continue;
            }
            found += 1;
            let want = profile(&base);
            wrong += (total(&base) != 6) as usize;
            disagree += dirs.iter().filter(|&&d| profile(&stable_intersection_with(&p, g, d)) != want).count();
        }
        ok &= wrong == 0 && disagree == 0 && found == NON_TRANSVERSE && dirs.len() >= 2;
        let _ = write!(detail, " {}: wrong totals {wrong}, non-transverse {found}, directions {}, disagreements {disagree};", s.name, dirs.len());
    }
    (ok, detail.trim().to_string())
}

fn types_by_dimension(subjects: &[Subject]) -> (bool, String) {
    let catalog = Catalog::builtin();
    let mut bad = String::new();
    let mut three_cells = 0;
    for s in subjects {
        let locus = &s.analysis.locus;
        for (i, cell) in locus.cells.iter().enumerate() {
            let Ok(info) = member_info(&catalog, s.gamma(), locus, i) else {
                let _ = write!(bad, " {} cell {i} unclassified", s.name);
                continue;
            };
            let dim = cell.dim();
            three_cells += (dim == 3) as usize;
            for t in &info.types {
                let generic_only = ["(1a)", "(1b)", "(1')"].contains(&t.label);
                let vertex_only = ["(3h)", "(3d)", "(8)", "(6a')", "(6b')"].contains(&t.label);
                if (dim == 3 && !generic_only) || (vertex_only && dim != 0) {
                    let _ = write!(bad, " {} cell {i} dim {dim} {}", s.name, t.label);
                }
            }
        }
    }
    (bad.is_empty(), format!("3-cells {three_cells}{bad}"))
}

fn symmetry(subjects: &[Subject]) -> (bool, String) {
    let mut bad = String::new();
    for s in subjects {
        let reference = s.analysis.report.signature();
        for g in D4Element::all() {
            let image = signature(&d4_coeffs(&g, &s.coeffs)).map_err(|e| e.to_string());
            if image.as_deref() != Ok(reference.as_slice()) {
                let _ = write!(bad, " {} symmetry {}", s.name, g.index());
            }
        }
    }
    (bad.is_empty(), format!("{} curves x 8 symmetries{bad}", subjects.len()))
}

fn realizations(left: &Subject, right: &Subject) -> (bool, String) {
    let have = |s: &Subject| -> BTreeSet<[u32; 4]> { s.partitions().into_iter().flatten().collect() };
    let (l, r) = (have(left), have(right));
    let want_l = [[0, 2, 1, 0], [4, 2, 0, 0]];
    let want_r = [[0, 4, 0, 0], [8, 0, 0, 0], [0, 0, 0, 1], [0, 0, 2, 0]];
    let ok = want_l.iter().all(|p| l.contains(p)) && want_r.iter().all(|p| r.contains(p));
    let all: BTreeSet<[u32; 4]> = l.union(&r).copied().collect();
    (ok, format!("left {l:?} right {r:?} distinct {}", all.len()))
}

#[test]
fn acceptance() {
    let mut subjects: Vec<Subject> =
        RANDOM_SEEDS.iter().map(|&s| Subject::new(format!("seed{s}"), random_coefficients(s))).collect();
    subjects.push(Subject::new("left".into(), matrix(&LEFT)));
    subjects.push(Subject::new("right".into(), matrix(&RIGHT)));

    let mut out = Outcome { lines: Vec::new(), failed: 0 };
    let (p, d) = class_count(&subjects);
    out.record(1, "class count", p, d);
    let (p, d) = lift_totals(&subjects);
    out.record(2, "lift total", p, d);
    let (p, d) = partition_membership(&subjects);
    out.record(3, "partition membership", p, d);
    let (p, d) = partition_by_dimension(&subjects);
    out.record(4, "dimension table with (4b)", p, d);
    let (p, d) = dimension_tuples(&subjects);
    out.record(5, "dimension tuples", p, d);
    let (p, d) = connectivity(&subjects);
    out.record(6, "connectivity", p, d);
    let (p, d) = segre_round_trips();
    out.record(7, "segre map", p, d);
    let (p, d) = stable_intersections(&subjects);
    out.record(8, "stable intersection", p, d);
    let (p, d) = types_by_dimension(&subjects);
    out.record(9, "types by cell dimension", p, d);
    let (p, d) = symmetry(&subjects);
    out.record(10, "d4 invariance", p, d);
    let (p, d) = realizations(&subjects[5], &subjects[6]);
    out.record(11, "all six partitions realized", p, d);

    for line in &out.lines {
        println!("{line}");
    }
    assert_eq!(out.failed, 0, "{}", out.lines.join("\n"));
}
