//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every expected value is recomputed here by brute force with a separate
//! implementation of the field arithmetic, so the checks do not share code
//! paths with the algorithms under test beyond the input generator matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use lincode_cli::files::format_code;
use lincode_cli::RunReport;
use lincode_core::catalog::{hamming74, repetition, ternary_322, tetracode};
use lincode_core::extend::{
    canonical_candidate_count, double_extension_search, exhaustive_extensions, hill_lizak_precheck,
    verify_extension, Precheck,
};
use lincode_core::polysolve::{build_extension_ideal, buchberger, variety, GroebnerBudget, MonomialOrder};
use lincode_core::{
    enumeration_cost, lower_bound, minimum_weight_words_with, solve, Error, ExtendOptions,
    ExtensionMatrix, ExtensionProblem, FieldElement, FieldSpec, GeneratorMatrix, InformationSetCollection, Method,
    SearchMode, Strategy,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIELDS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

/// GF(q) built from the defining polynomial by shift-and-reduce.
struct Gf {
    q: usize,
    add: Vec<Vec<u8>>,
    mul: Vec<Vec<u8>>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Gf {
    fn new(field: &FieldSpec) -> Gf {
        let q = field.order() as usize;
        let p = field.characteristic() as usize;
        let e = field.degree() as usize;
        let modulus: Vec<usize> = field.modulus().iter().map(|&c| c as usize).collect();
        let digits = |mut x: usize| -> Vec<usize> {
            (0..e)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let value = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &d| acc * p + d);

        let mut add = vec![vec![0u8; q]; q];
        let mut mul = vec![vec![0u8; q]; q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = value(&sum) as u8;
                mul[a][b] = if e == 1 {
                    (a * b % p) as u8
                } else {
                    let mut acc = vec![0usize; e];
                    for &ai in da.iter().rev() {
                        let top = acc[e - 1];
                        let mut shifted = vec![0usize; e];
                        for j in (1..e).rev() {
                            shifted[j] = acc[j - 1];
                        }
                        for (j, s) in shifted.iter_mut().enumerate() {
                            *s = (*s + p * p - top * modulus[j] % p) % p;
                        }
                        for (j, s) in shifted.iter_mut().enumerate() {
                            *s = (*s + ai * db[j]) % p;
                        }
                        acc = shifted;
                    }
                    value(&acc) as u8
                };
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a][b] == 0).unwrap() as u8).collect();
        let mut inv = vec![0u8; q];
        for (a, slot) in inv.iter_mut().enumerate().skip(1) {
            *slot = (1..q).find(|&b| mul[a][b] == 1).expect("field has inverses") as u8;
        }
        Gf { q, add, mul, neg, inv }
    }

    fn dot(&self, a: &[u8], b: &[u8]) -> u8 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add[acc as usize][self.mul[x as usize][y as usize] as usize])
    }

    fn normalize(&self, v: &[u8]) -> Vec<u8> {
        match v.iter().find(|&&x| x != 0) {
            None => v.to_vec(),
            Some(&lead) => {
                let s = self.inv[lead as usize] as usize;
                v.iter().map(|&x| self.mul[s][x as usize]).collect()
            }
        }
    }

    /// Every vector of GF(q)^len, lexicographic.
    fn vectors(&self, len: usize) -> Vec<Vec<u8>> {
        let total = self.q.pow(len as u32);
        (0..total)
            .map(|mut idx| {
                let mut v = vec![0u8; len];
                for x in v.iter_mut().rev() {
                    *x = (idx % self.q) as u8;
                    idx /= self.q;
                }
                v
            })
            .collect()
    }

    /// Nonzero vectors whose first nonzero entry is one.
    fn normalized_vectors(&self, len: usize) -> Vec<Vec<u8>> {
        self.vectors(len).into_iter().filter(|v| v.iter().find(|&&x| x != 0) == Some(&1)).collect()
    }
}

fn weight(v: &[u8]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

fn symbols(g: &GeneratorMatrix) -> Vec<Vec<u8>> {
    g.rows().iter().map(|r| r.iter().map(|x| x.index()).collect()).collect()
}

fn elements(v: &[u8]) -> Vec<FieldElement> {
    v.iter().map(|&x| FieldElement::new(x)).collect()
}

fn column_symbols(x: &ExtensionMatrix) -> Vec<Vec<u8>> {
    x.columns().iter().map(|c| c.iter().map(|e| e.index()).collect()).collect()
}

/// Visits every nonzero message with its codeword, updating the codeword
/// incrementally as the message odometer turns.
fn for_each_codeword(gf: &Gf, rows: &[Vec<u8>], mut visit: impl FnMut(&[u8], &[u8])) {
    let (k, n) = (rows.len(), rows[0].len());
    let mut msg = vec![0u8; k];
    let mut word = vec![0u8; n];
    loop {
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let old = msg[i];
            let new = ((old as usize + 1) % gf.q) as u8;
            msg[i] = new;
            let delta = gf.add[new as usize][gf.neg[old as usize] as usize] as usize;
            for (w, &r) in word.iter_mut().zip(&rows[i]) {
                *w = gf.add[*w as usize][gf.mul[delta][r as usize] as usize];
            }
            if new != 0 {
                break;
            }
        }
        visit(&msg, &word);
    }
}

struct Brute {
    d: usize,
    /// Normalized minimum-weight codewords.
    words: BTreeSet<Vec<u8>>,
    /// Codewords of weight d, every multiple counted.
    count: u64,
    weights: BTreeSet<usize>,
}

fn brute(gf: &Gf, rows: &[Vec<u8>]) -> Brute {
    let mut b = Brute { d: usize::MAX, words: BTreeSet::new(), count: 0, weights: BTreeSet::new() };
    for_each_codeword(gf, rows, |_, word| {
        let w = weight(word);
        b.weights.insert(w);
        if w < b.d {
            b.d = w;
            b.words.clear();
            b.count = 0;
        }
        if w == b.d {
            b.count += 1;
            b.words.insert(gf.normalize(word));
        }
    });
    b
}

/// (message, weight) for every nonzero message.
fn message_weights(gf: &Gf, rows: &[Vec<u8>]) -> Vec<(Vec<u8>, usize)> {
    let mut out = Vec::new();
    for_each_codeword(gf, rows, |msg, word| out.push((msg.to_vec(), weight(word))));
    out
}

/// Minimum distance of (G | X) from the message weights of G.
fn extended_distance(gf: &Gf, weights: &[(Vec<u8>, usize)], columns: &[Vec<u8>]) -> usize {
    weights
        .iter()
        .map(|(msg, w)| w + columns.iter().filter(|c| gf.dot(msg, c) != 0).count())
        .min()
        .unwrap()
}

/// Canonical single columns extending the code, by direct distance computation.
fn brute_single_extensions(gf: &Gf, k: usize, weights: &[(Vec<u8>, usize)], d: usize) -> BTreeSet<Vec<Vec<u8>>> {
    gf.normalized_vectors(k)
        .into_iter()
        .filter(|x| extended_distance(gf, weights, std::slice::from_ref(x)) > d)
        .map(|x| vec![x])
        .collect()
}

/// Canonical column pairs (zero column allowed, not both) extending the code.
fn brute_pair_extensions(gf: &Gf, k: usize, weights: &[(Vec<u8>, usize)], d: usize) -> BTreeSet<Vec<Vec<u8>>> {
    let mut points = vec![vec![0u8; k]];
    points.extend(gf.normalized_vectors(k));
    let mut out = BTreeSet::new();
    for (a, x) in points.iter().enumerate() {
        for y in &points[a..] {
            if weight(y) == 0 {
                continue;
            }
            let pair = vec![x.clone(), y.clone()];
            if extended_distance(gf, weights, &pair) > d {
                out.insert(pair);
            }
        }
    }
    out
}

fn random_code(rng: &mut ChaCha8Rng, q: u32, k: usize, n: usize) -> GeneratorMatrix {
    GeneratorMatrix::random(FieldSpec::new(q).unwrap(), k, n, rng).unwrap()
}

fn max_dimension(q: u32, log2_bound: u32, cap: usize) -> usize {
    (1..=cap).take_while(|&k| (q as u64).pow(k as u32) <= 1u64 << log2_bound).last().unwrap_or(1)
}

fn solution_set(x: &BTreeSet<ExtensionMatrix>) -> BTreeSet<Vec<Vec<u8>>> {
    x.iter().map(column_symbols).collect()
}

fn all_mode() -> ExtendOptions {
    ExtendOptions { mode: SearchMode::All, ..ExtendOptions::default() }
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

/// 210 codes over every field, k ≤ 8, n ≤ 24, qᵏ ≤ 2¹⁶.
fn minwt_corpus() -> Vec<GeneratorMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    (0..210)
        .map(|i| {
            let q = FIELDS[i % FIELDS.len()];
            let k = rng.gen_range(1..=max_dimension(q, 16, 8));
            let n = rng.gen_range(k..=24);
            random_code(&mut rng, q, k, n)
        })
        .collect()
}

/// 112 codes with qᵏ ≤ 2¹².
fn extension_corpus() -> Vec<GeneratorMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    (0..112)
        .map(|i| {
            let q = FIELDS[i % FIELDS.len()];
            let k = rng.gen_range(1..=max_dimension(q, 12, 12));
            let n = rng.gen_range(k..=(k + 8).min(20));
            random_code(&mut rng, q, k, n)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

fn minimum_weight_oracle() -> Outcome {
    let mut field_checks = 0;
    for &q in &FIELDS {
        let field = FieldSpec::new(q).unwrap();
        let gf = Gf::new(&field);
        for a in field.elements() {
            for b in field.elements() {
                ensure!(
                    field.mul(a, b).index() == gf.mul[a.index() as usize][b.index() as usize]
                        && field.add(a, b).index() == gf.add[a.index() as usize][b.index() as usize],
                    "GF({q}) tables disagree at ({a}, {b})"
                );
                field_checks += 1;
            }
        }
    }

    let corpus = minwt_corpus();
    let mut algorithm_time = Duration::ZERO;
    let mut fields = BTreeSet::new();
    for (i, g) in corpus.iter().enumerate() {
        let gf = Gf::new(g.field());
        let b = brute(&gf, &symbols(g));
        let params = format!("code {i} [{},{}]_{}", g.n(), g.k(), g.field().order());
        for strategy in [Strategy::Auto, Strategy::InformationSets] {
            let t = Instant::now();
            let report = minimum_weight_words_with(g, &InformationSetCollection::build(g), strategy);
            algorithm_time += t.elapsed();
            let reps: BTreeSet<Vec<u8>> = report.reps.iter().map(|w| w.iter().map(|x| x.index()).collect()).collect();
            ensure!(report.d == b.d, "{params} {strategy:?}: d = {} but brute force gives {}", report.d, b.d);
            ensure!(reps == b.words, "{params} {strategy:?}: minimum-weight words differ");
            ensure!(report.count_full == b.count as u128, "{params} {strategy:?}: |S_d| {} vs {}", report.count_full, b.count);
        }
        fields.insert(g.field().order());
    }
    ensure!(fields.len() == FIELDS.len(), "not every field was covered");
    ensure!(algorithm_time < Duration::from_secs(60), "took {algorithm_time:?}");
    Ok(format!(
        "{} codes over {} fields match brute force with both strategies, algorithm time {:.2}s; {field_checks} table entries cross-checked",
        corpus.len(),
        fields.len(),
        algorithm_time.as_secs_f64()
    ))
}

struct ExtensionCase {
    g: GeneratorMatrix,
    d: usize,
    weights: Vec<(Vec<u8>, usize)>,
    singles: BTreeSet<Vec<Vec<u8>>>,
}

fn extension_cases() -> Vec<ExtensionCase> {
    extension_corpus()
        .into_iter()
        .map(|g| {
            let gf = Gf::new(g.field());
            let weights = message_weights(&gf, &symbols(&g));
            let d = weights.iter().map(|(_, w)| *w).min().unwrap();
            let singles = brute_single_extensions(&gf, g.k(), &weights, d);
            ExtensionCase { g, d, weights, singles }
        })
        .collect()
}

fn criterion_soundness(cases: &[ExtensionCase]) -> Outcome {
    let mut columns = 0usize;
    let mut extendable = 0usize;
    for (i, c) in cases.iter().enumerate() {
        let gf = Gf::new(c.g.field());
        let problem = ExtensionProblem::new(c.g.clone(), 1).map_err(|e| e.to_string())?;
        ensure!(problem.d == c.d, "code {i}: d = {} but brute force gives {}", problem.d, c.d);
        for x in gf.normalized_vectors(c.g.k()) {
            let matrix = ExtensionMatrix::from_columns(c.g.k(), vec![elements(&x)]).unwrap();
            let predicted = lincode_core::check_extension(problem.field(), &problem.jd, &matrix);
            let actual = c.singles.contains(&vec![x.clone()]);
            ensure!(predicted == actual, "code {i}: column {x:?} criterion {predicted}, distance says {actual}");
            columns += 1;
        }
        if !c.singles.is_empty() {
            extendable += 1;
        }
    }
    Ok(format!("{} codes, {columns} canonical columns, {extendable} extendable codes", cases.len()))
}

fn method_agreement(cases: &[ExtensionCase]) -> Outcome {
    let opts = all_mode();
    let mut runs = 0;
    let mut pair_codes = 0;
    for (i, c) in cases.iter().enumerate() {
        let q = c.g.field().order();
        let problem = ExtensionProblem::new(c.g.clone(), 1).map_err(|e| e.to_string())?;
        let mut methods = vec![Method::Exhaustive, Method::Groebner, Method::Auto];
        if q == 2 {
            methods.push(Method::Linear);
        }
        for method in methods {
            let out = solve(&problem, method, &opts).map_err(|e| format!("code {i} {method}: {e}"))?;
            ensure!(out.solutions.exhausted, "code {i} {method}: search not exhaustive");
            ensure!(solution_set(&out.solutions.solutions) == c.singles, "code {i}: {method} disagrees with brute force");
            runs += 1;
        }

        if (q as u64).pow(2 * c.g.k() as u32) <= 1 << 10 {
            let gf = Gf::new(c.g.field());
            let pairs = brute_pair_extensions(&gf, c.g.k(), &c.weights, c.d);
            let problem = ExtensionProblem::new(c.g.clone(), 2).map_err(|e| e.to_string())?;
            for method in [Method::Exhaustive, Method::Groebner] {
                let out = solve(&problem, method, &opts).map_err(|e| format!("code {i} m=2 {method}: {e}"))?;
                ensure!(solution_set(&out.solutions.solutions) == pairs, "code {i} m=2: {method} disagrees");
                runs += 1;
            }
            pair_codes += 1;
        }
    }
    Ok(format!("{} codes, {runs} solver runs identical ({pair_codes} codes also with two columns)", cases.len()))
}

fn binary_parity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    let gf = Gf::new(&FieldSpec::new(2).unwrap());
    let mut odd = 0;
    let mut attempts = 0;
    while odd < 60 {
        attempts += 1;
        ensure!(attempts < 10_000, "too few codes with odd minimum distance");
        let k = rng.gen_range(2..=8);
        let n = rng.gen_range(k + 1..=k + 10);
        let g = random_code(&mut rng, 2, k, n);
        let rows = symbols(&g);
        let weights = message_weights(&gf, &rows);
        let d = weights.iter().map(|(_, w)| *w).min().unwrap();
        if d % 2 == 0 {
            continue;
        }
        odd += 1;
        let parity: Vec<u8> = rows.iter().map(|r| (r.iter().map(|&x| x as usize).sum::<usize>() % 2) as u8).collect();
        let problem = ExtensionProblem::new(g.clone(), 1).map_err(|e| e.to_string())?;
        for method in [Method::Auto, Method::Exhaustive] {
            let out = solve(&problem, method, &all_mode()).map_err(|e| e.to_string())?;
            ensure!(!out.solutions.is_empty(), "[{n},{k},{d}] has no extension by {method}");
            ensure!(
                solution_set(&out.solutions.solutions).contains(&vec![parity.clone()]),
                "[{n},{k},{d}]: row-sum column missing from the {method} solutions"
            );
        }
        let extended = extended_distance(&gf, &weights, &[parity]);
        ensure!(extended == d + 1 && extended.is_multiple_of(2), "[{n},{k},{d}]: parity extension has distance {extended}");
    }
    Ok(format!("{odd} binary codes with odd d extend by their row-sum column to even d+1"))
}

fn timed<T>(budget: Duration, what: &str, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let t = Instant::now();
    let out = f()?;
    ensure!(t.elapsed() < budget, "{what} took {:?}", t.elapsed());
    Ok(out)
}

fn named_instances() -> Outcome {
    let second = Duration::from_secs(1);
    let opts = all_mode();

    timed(second, "Hamming", || {
        let g = hamming74();
        let gf = Gf::new(g.field());
        let weights = message_weights(&gf, &symbols(&g));
        let brute = brute_single_extensions(&gf, 4, &weights, 3);
        let expected = BTreeSet::from([vec![vec![1, 1, 1, 0]]]);
        ensure!(brute == expected, "brute force finds {brute:?}");
        let problem = ExtensionProblem::new(g.clone(), 1).map_err(|e| e.to_string())?;
        for method in [Method::Exhaustive, Method::Linear, Method::Groebner, Method::Auto] {
            let out = solve(&problem, method, &opts).map_err(|e| e.to_string())?;
            ensure!(solution_set(&out.solutions.solutions) == expected, "Hamming: {method} differs");
        }
        let x = problem_solution(&problem)?;
        let v = verify_extension(&g, &x).map_err(|e| e.to_string())?;
        ensure!((v.n, v.k, v.d_extended) == (8, 4, 4), "Hamming extends to {v:?}");
        Ok(())
    })?;

    timed(second, "tetracode", || {
        let g = tetracode();
        let gf = Gf::new(g.field());
        let weights = message_weights(&gf, &symbols(&g));
        ensure!(brute_single_extensions(&gf, 2, &weights, 3).is_empty(), "brute force extends the tetracode");
        let problem = ExtensionProblem::new(g, 1).map_err(|e| e.to_string())?;
        for method in [Method::Exhaustive, Method::Groebner, Method::Auto] {
            let out = solve(&problem, method, &opts).map_err(|e| e.to_string())?;
            ensure!(out.solutions.is_empty(), "tetracode: {method} finds a solution");
            if let Some(gb) = &out.groebner {
                ensure!(gb.unit_ideal, "tetracode: basis is not {{1}}");
            }
        }
        let linear = solve(&problem, Method::Linear, &opts);
        ensure!(matches!(linear, Err(Error::WrongField(3))), "linear method over GF(3): {linear:?}");
        Ok(())
    })?;

    timed(second, "[3,2,2]_3", || {
        let g = ternary_322();
        let gf = Gf::new(g.field());
        let weights = message_weights(&gf, &symbols(&g));
        let expected = BTreeSet::from([vec![vec![1, 2]]]);
        ensure!(brute_single_extensions(&gf, 2, &weights, 2) == expected, "brute force disagrees");
        let problem = ExtensionProblem::new(g.clone(), 1).map_err(|e| e.to_string())?;
        for method in [Method::Exhaustive, Method::Groebner, Method::Auto] {
            let out = solve(&problem, method, &opts).map_err(|e| e.to_string())?;
            ensure!(solution_set(&out.solutions.solutions) == expected, "[3,2,2]_3: {method} differs");
        }
        let report = double_extension_search(&g, Method::Auto, &opts).map_err(|e| e.to_string())?;
        ensure!(solution_set(&report.singles.iter().cloned().collect()) == expected, "double search singles");
        ensure!(report.chains.is_empty(), "double search found a second step");

        let extended = g.append_columns(&[elements(&[1, 2])]).unwrap();
        let weights = message_weights(&gf, &symbols(&extended));
        ensure!(brute_single_extensions(&gf, 2, &weights, 3).is_empty(), "[4,2,3]_3 extends by brute force");
        Ok(())
    })?;

    Ok("Hamming [7,4,3]_2 → unique [8,4,4]_2; tetracode: none (basis {1}); [3,2,2]_3 → (1,2)ᵀ, no second step; each < 1s".into())
}

fn problem_solution(problem: &ExtensionProblem) -> Result<ExtensionMatrix, String> {
    let out = solve(problem, Method::Exhaustive, &ExtendOptions::default()).map_err(|e| e.to_string())?;
    out.solutions.solutions.first().cloned().ok_or_else(|| "no solution".to_string())
}

fn cost_model() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut tuples = 0;
    let mut runs = 0;
    let mut worst = 0.0f64;
    for i in 0..28 {
        let q = FIELDS[i % FIELDS.len()];
        let k = rng.gen_range(1..=max_dimension(q, 12, 7));
        let n = rng.gen_range(k..=(3 * k).min(22));
        let g = random_code(&mut rng, q, k, n);
        let gf = Gf::new(g.field());
        let coll = InformationSetCollection::build(&g);
        let (mu, ranks) = (coll.mu(), coll.ranks());
        let d = brute(&gf, &symbols(&g)).d;

        for w in 0..=k {
            let direct: usize = ranks.iter().map(|&r| (w + 1).saturating_sub(k - r)).sum();
            ensure!(lower_bound(w, k, &ranks) == direct, "lower bound at w={w}, ranks {ranks:?}");
        }
        let w0 = (1..=k)
            .find(|&w| ranks.iter().map(|&r| (w + 1).saturating_sub(k - r)).sum::<usize>() > d)
            .unwrap_or(k);
        let per_matrix = gf.normalized_vectors(k).iter().filter(|v| weight(v) <= w0).count() as u128;
        let cost = enumeration_cost(k, q, mu, &ranks, d);
        ensure!(cost.w0 == w0, "tuple (k={k}, q={q}, mu={mu}, d={d}): w0 {} vs {w0}", cost.w0);
        ensure!(cost.encodings == mu as u128 * per_matrix, "tuple (k={k}, q={q}, mu={mu}, d={d}): encodings");
        tuples += 1;

        for strategy in [Strategy::Auto, Strategy::InformationSets] {
            let live = minimum_weight_words_with(&g, &coll, strategy);
            ensure!(
                live.encodings_done as u128 <= cost.encodings,
                "[{n},{k},{d}]_{q} {strategy:?}: {} encodings, predicted {}",
                live.encodings_done,
                cost.encodings
            );
            worst = worst.max(live.encodings_done as f64 / cost.encodings as f64);
            runs += 1;
        }
    }
    Ok(format!("{tuples} tuples match direct summation; {runs} live runs within prediction (max ratio {worst:.2})"))
}

/// Smallest member of the orbit of X under column scaling and permutation.
fn orbit_canonical(gf: &Gf, columns: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut best: Option<Vec<Vec<u8>>> = None;
    let units: Vec<usize> = (1..gf.q).collect();
    let m = columns.len();
    let perms: Vec<Vec<usize>> = if m == 1 { vec![vec![0]] } else { vec![vec![0, 1], vec![1, 0]] };
    for perm in &perms {
        let mut scalings = vec![vec![]];
        for _ in 0..m {
            scalings = scalings
                .into_iter()
                .flat_map(|s: Vec<usize>| units.iter().map(move |&u| [s.clone(), vec![u]].concat()))
                .collect();
        }
        for s in &scalings {
            let image: Vec<Vec<u8>> = perm
                .iter()
                .zip(s)
                .map(|(&c, &u)| columns[c].iter().map(|&x| gf.mul[u][x as usize]).collect())
                .collect();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap()
}

fn candidate_counting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut lines = Vec::new();
    for q in [2u32, 3] {
        let field = FieldSpec::new(q).unwrap();
        let gf = Gf::new(&field);
        for m in 1..=2usize {
            for k in 1..=4usize {
                let mut orbits = BTreeSet::new();
                for flat in gf.vectors(k * m).into_iter().skip(1) {
                    let columns: Vec<Vec<u8>> = flat.chunks(k).map(|c| c.to_vec()).collect();
                    orbits.insert(orbit_canonical(&gf, &columns));
                }
                let count = orbits.len() as u128;
                let q128 = q as u128;
                let bound = (q128.pow((m * k) as u32) - 1).div_ceil(if m == 1 { 1 } else { 2 } * (q128 - 1).pow(m as u32));
                ensure!(count >= bound, "q={q} k={k} m={m}: {count} orbits below the bound {bound}");
                ensure!(canonical_candidate_count(q, k, m) == count, "q={q} k={k} m={m}: formula vs {count} orbits");

                let g = random_code(&mut rng, q, k, k + 2);
                let problem = ExtensionProblem::new(g, m).map_err(|e| e.to_string())?;
                let out = exhaustive_extensions(&field, &problem.jd, k, m, SearchMode::All, u128::MAX)
                    .map_err(|e| e.to_string())?;
                ensure!(out.candidates_tested == count, "q={q} k={k} m={m}: {} candidates vs {count} orbits", out.candidates_tested);
                let expected: BTreeSet<Vec<Vec<u8>>> = orbits
                    .into_iter()
                    .filter(|x| problem.jd.iter().all(|v| {
                        let v: Vec<u8> = v.iter().map(|e| e.index()).collect();
                        x.iter().any(|c| gf.dot(&v, c) != 0)
                    }))
                    .collect();
                ensure!(solution_set(&out.solutions.solutions) == expected, "q={q} k={k} m={m}: solution orbits differ");
                lines.push(format!("{count}"));
            }
        }
    }
    Ok(format!("16 (q,k,m) cases, candidate counts equal orbit counts: {}", lines.join(" ")))
}

fn groebner_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut shapes = Vec::new();
    for &q in &FIELDS {
        for m in 1..=2usize {
            for k in 1..=8 / m {
                if (q as u64).pow((k * m) as u32) <= 1 << 12 {
                    shapes.push((q, k, m));
                }
            }
        }
    }
    let mut unit = 0;
    let mut spolys = 0usize;
    let total = 120;
    for i in 0..total {
        let (q, k, m) = shapes[i % shapes.len()];
        let field = FieldSpec::new(q).unwrap();
        let gf = Gf::new(&field);
        let points = gf.normalized_vectors(k);
        let size = rng.gen_range(1..=points.len().min(4 * k));
        let mut jd: BTreeSet<Vec<u8>> = BTreeSet::new();
        while jd.len() < size {
            jd.insert(points[rng.gen_range(0..points.len())].clone());
        }
        let jd_fe: Vec<Vec<FieldElement>> = jd.iter().map(|v| elements(v)).collect();
        let order = if (q as u64).pow((k * m) as u32) <= 1 << 10 && i % 3 == 0 { MonomialOrder::Lex } else { MonomialOrder::DegRevLex };
        let case = format!("ideal {i} (q={q}, k={k}, m={m}, |J|={size}, {order:?})");

        let ideal = build_extension_ideal(&field, &jd_fe, k, m).map_err(|e| format!("{case}: {e}"))?;
        let gb = buchberger(&ideal, order, GroebnerBudget::default()).map_err(|e| format!("{case}: {e}"))?;
        let found: BTreeSet<Vec<u8>> = variety(&gb).iter().map(|p| p.iter().map(|x| x.index()).collect()).collect();

        let mut expected = BTreeSet::new();
        for point in gf.vectors(k * m) {
            let direct = point[0] <= 1
                && jd.iter().all(|v| (0..m).any(|j| gf.dot(v, &point[j * k..(j + 1) * k]) != 0));
            let generators = ideal.vanishes_at(&elements(&point));
            ensure!(direct == generators, "{case}: generator evaluation disagrees at {point:?}");
            if direct {
                expected.insert(point);
            }
        }
        ensure!(found == expected, "{case}: variety has {} points, brute force {}", found.len(), expected.len());
        ensure!(gb.is_unit_ideal() == expected.is_empty(), "{case}: unit ideal {} with {} points", gb.is_unit_ideal(), expected.len());
        if gb.is_unit_ideal() {
            unit += 1;
        }

        let ring = &gb.ring;
        for a in 0..gb.polys.len() {
            for b in a + 1..gb.polys.len() {
                let s = ring.s_polynomial(&gb.polys[a], &gb.polys[b]);
                ensure!(ring.normal_form(&s, &gb.polys).is_zero(), "{case}: S({a},{b}) does not reduce to 0");
                spolys += 1;
            }
        }
    }
    Ok(format!("{total} ideals over {} shapes, varieties exact, {unit} unit ideals, {spolys} S-polynomials reduce to 0", shapes.len()))
}

fn hill_lizak(cases: &[ExtensionCase]) -> Outcome {
    let mut codes: Vec<GeneratorMatrix> = minwt_corpus();
    codes.extend(cases.iter().map(|c| c.g.clone()));
    codes.extend([hamming74(), tetracode(), ternary_322()]);
    for &q in &FIELDS {
        for n in 2..=7 {
            codes.push(repetition(q, n));
        }
    }

    let mut applicable = BTreeMap::<u32, usize>::new();
    for (i, g) in codes.iter().enumerate() {
        let q = g.field().order();
        let gf = Gf::new(g.field());
        let b = brute(&gf, &symbols(g));
        let qs = q as usize;
        let gcd = (1..=b.d.min(qs)).rev().find(|x| b.d.is_multiple_of(*x) && qs.is_multiple_of(*x)).unwrap();
        let holds = gcd == 1 && b.weights.iter().all(|&w| w % qs == 0 || w % qs == b.d % qs);
        let verdict = hill_lizak_precheck(&b.weights, q, b.d);
        ensure!((verdict == Precheck::Extendable) == holds, "code {i}: precheck {verdict:?}, condition {holds}");
        if !holds {
            continue;
        }
        *applicable.entry(q).or_default() += 1;
        let problem = ExtensionProblem::new(g.clone(), 1).map_err(|e| e.to_string())?;
        let x = problem_solution(&problem).map_err(|e| format!("code {i} [{},{},{}]_{q}: {e}", g.n(), g.k(), b.d))?;
        let weights = message_weights(&gf, &symbols(g));
        let d_ext = extended_distance(&gf, &weights, &column_symbols(&x));
        ensure!(d_ext == b.d + 1, "code {i}: extension reaches only {d_ext}");
    }
    let per_field: Vec<String> = applicable.iter().map(|(q, c)| format!("q={q}: {c}")).collect();
    Ok(format!("{} codes checked; condition holds and an extension exists for {}", codes.len(), per_field.join(", ")))
}

fn cli_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("lincode-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    let mut codes: Vec<(String, GeneratorMatrix)> =
        vec![("hamming".into(), hamming74()), ("tetracode".into(), tetracode()), ("ternary".into(), ternary_322())];
    for (i, &q) in FIELDS.iter().enumerate() {
        let k = rng.gen_range(2..=max_dimension(q, 10, 6));
        let n = rng.gen_range(k + 1..=k + 8);
        codes.push((format!("random{i}"), random_code(&mut rng, q, k, n)));
    }
    let column = dir.join("parity.col");
    std::fs::write(&column, "2 1 4\n1\n1\n1\n0\n").map_err(|e| e.to_string())?;

    let mut compared = 0;
    for (name, g) in &codes {
        let path: PathBuf = dir.join(format!("{name}.code"));
        std::fs::write(&path, format_code(g)).map_err(|e| e.to_string())?;
        let p = path.to_str().unwrap().to_string();
        let mut commands: Vec<Vec<String>> = vec![
            vec!["info".into(), p.clone()],
            vec!["minwt".into(), p.clone()],
            vec!["extend".into(), p.clone()],
            vec!["extend".into(), p.clone(), "--all".into()],
            vec!["extend".into(), p.clone(), "--all".into(), "--method".into(), "exhaustive".into()],
        ];
        if (g.field().order() as u64).pow(2 * g.k() as u32) <= 1 << 10 {
            commands.push(vec!["extend".into(), p.clone(), "--columns".into(), "2".into(), "--all".into()]);
        }
        if name == "hamming" {
            commands.push(vec!["verify".into(), p.clone(), "--ext".into(), column.to_str().unwrap().into()]);
        }
        for args in commands {
            let mut reports = Vec::new();
            for threads in ["1", "2", "4", "1"] {
                let out = Command::new(env!("CARGO_BIN_EXE_lincode"))
                    .arg("--json")
                    .args(&args)
                    .env("LINCODE_THREADS", threads)
                    .output()
                    .map_err(|e| e.to_string())?;
                ensure!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
                let report: RunReport = serde_json::from_slice(&out.stdout).map_err(|e| format!("{args:?}: {e}"))?;
                reports.push(report.without_timings());
            }
            ensure!(reports.windows(2).all(|w| w[0] == w[1]), "{args:?}: reports differ across runs");
            compared += 1;
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    Ok(format!("{compared} commands on {} codes identical across LINCODE_THREADS=1,2,4,1", codes.len()))
}

fn main() {
    let cases = std::cell::OnceCell::new();
    let cases = || cases.get_or_init(extension_cases);
    let criteria: Vec<(&str, Check)> = vec![
        ("minimum-weight oracle equivalence", Box::new(minimum_weight_oracle)),
        ("extension criterion soundness", Box::new(|| criterion_soundness(cases()))),
        ("method agreement", Box::new(|| method_agreement(cases()))),
        ("binary parity extension", Box::new(binary_parity)),
        ("named small instances", Box::new(named_instances)),
        ("enumeration cost model", Box::new(cost_model)),
        ("canonical candidate counting", Box::new(candidate_counting)),
        ("Gröbner engine", Box::new(groebner_engine)),
        ("Hill-Lizak sufficient condition", Box::new(|| hill_lizak(cases()))),
        ("CLI determinism", Box::new(cli_determinism)),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
