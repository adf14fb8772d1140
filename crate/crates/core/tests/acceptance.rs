//! One line per acceptance criterion; the test fails if any criterion does.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::One;
use snk1_core::algebra::{SnElement, SnMonomial};
use snk1_core::group::{
    factor_theta_elementary, gen_theta, identity_suite, CornerMatrix, GeneratorToken,
};
use snk1_core::index::{complement, set, subsets_of_size, without, IndexSet};
use snk1_core::k1::{
    bdet, decompose, decompose_full_gl, deg_nij, enumerate_generators, is_elementary_product,
};
use snk1_core::sample::Sampler;
use snk1_core::Q;

type E = SnElement<Q>;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict { passed, detail: detail.into() }
}

fn within(v: Verdict, elapsed: Duration, limit: Duration) -> Verdict {
    if elapsed < limit {
        Verdict { passed: v.passed, detail: format!("{} in {elapsed:.2?}", v.detail) }
    } else {
        verdict(false, format!("{}; took {elapsed:.2?}, limit {limit:?}", v.detail))
    }
}

fn timed(limit_secs: u64, f: impl FnOnce() -> Verdict) -> Verdict {
    let t = Instant::now();
    let v = f();
    within(v, t.elapsed(), Duration::from_secs(limit_secs))
}

fn identity_replay() -> Verdict {
    timed(10, || {
        let required = [
            "shift-factorization",
            "lambda-ring-shift-factorization",
            "shift-block-reduction",
            "shift-block-inverse",
            "dressed-shift-block-reduction",
            "two-component-block",
            "dressed-two-component-block",
            "theta-sum-form",
            "theta-two-block",
            "theta-dressed-two-block",
            "theta-complement-fixed",
            "idempotent-block-reduction",
            "idempotent-diagonal-split",
            "dressed-shift-factorization",
            "commutator-expansion",
            "theta-mu-commutator-disjoint",
            "theta-mu-commutator-first",
            "theta-mu-commutator-second",
        ];
        let report = identity_suite();
        let by_id: BTreeMap<&str, bool> = report.iter().map(|c| (c.id.as_str(), c.passed)).collect();
        let missing: Vec<&str> = required.iter().copied().filter(|id| !by_id.contains_key(id)).collect();
        let failed: Vec<&str> = report.iter().filter(|c| !c.passed).map(|c| c.id.as_str()).collect();
        verdict(
            missing.is_empty() && failed.is_empty(),
            format!("{} identities, missing {missing:?}, failing {failed:?}", report.len()),
        )
    })
}

fn theta_relations() -> Verdict {
    timed(5, || {
        let n = 4;
        let mut checked = 0;
        let mut bad = Vec::new();
        for size in 2..=4 {
            for j in subsets_of_size(n, size) {
                for &a in &j {
                    for &b in j.iter().filter(|&&b| b != a) {
                        let t = gen_theta::<Q>(n, a, b, &j).unwrap();
                        checked += 1;
                        if !(&t * &gen_theta::<Q>(n, b, a, &j).unwrap()).is_one() {
                            bad.push(format!("inverse {a}{b} {j:?}"));
                        }
                        for &c in j.iter().filter(|&&c| c != a && c != b) {
                            checked += 1;
                            let lhs = &t * &gen_theta::<Q>(n, b, c, &j).unwrap();
                            if lhs != gen_theta::<Q>(n, a, c, &j).unwrap() {
                                bad.push(format!("cocycle {a}{b}{c} {j:?}"));
                            }
                        }
                    }
                }
            }
        }
        verdict(bad.is_empty(), format!("{checked} relations, failing {bad:?}"))
    })
}

fn degree_table() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in [3, 4] {
        for big in (3..=n).flat_map(|k| subsets_of_size(n, k)).filter(|s| s.contains(&n)) {
            let m = *without(&big, &[n]).iter().max().unwrap();
            for &j in &without(&big, &[n, m]) {
                let theta = gen_theta::<Q>(n, m, j, &big).unwrap();
                for small in subsets_of_size(n, big.len() - 1) {
                    for i in complement(&small, n) {
                        let want = if small == without(&big, &[m]) && i == m {
                            -1
                        } else if small == without(&big, &[j]) && i == j {
                            1
                        } else {
                            0
                        };
                        checked += 1;
                        if deg_nij(&theta, &small, i).unwrap() != want {
                            bad.push(format!("n={n} J={big:?} j={j} I={small:?} i={i}"));
                        }
                    }
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{checked} degrees, failing {bad:?}"))
}

fn theta_factorization() -> Verdict {
    let mut parts = Vec::new();
    let mut passed = true;
    for (n, j, limit) in [(3, set(&[1, 2]), 30), (4, set(&[1, 2, 3]), 30), (5, set(&[1, 2, 3, 4]), 120)] {
        let v = timed(limit, || {
            let mut bad = Vec::new();
            for &a in &j {
                for &b in j.iter().filter(|&&b| b != a) {
                    let w = factor_theta_elementary::<Q>(n, a, b, &j).unwrap();
                    let target = CornerMatrix::diag(n, &[gen_theta(n - 1, a, b, &j).unwrap()]).unwrap();
                    if !w.is_elementary() || w.eval().unwrap() != target {
                        bad.push((a, b));
                    }
                }
            }
            verdict(bad.is_empty(), format!("J={j:?} failing {bad:?}"))
        });
        passed &= v.passed;
        parts.push(v.detail);
    }
    verdict(passed, parts.join("; "))
}

fn generator_count() -> Verdict {
    let want = [1usize, 5, 17, 49, 129];
    let got: Vec<usize> = (2..=6usize)
        .map(|size| {
            let ambient = size + 1;
            (2..ambient).map(|s| enumerate_generators::<Q>(ambient, s).unwrap().len()).sum()
        })
        .collect();
    verdict(got == want, format!("totals {got:?}"))
}

fn decomposition_round_trip() -> Verdict {
    timed(60, || {
        let mut s = Sampler::new(44);
        let supports: Vec<IndexSet> = (1..=3).flat_map(|k| subsets_of_size(3, k)).collect();
        let mut bad = 0;
        for k in 0..100 {
            let support = &supports[k % supports.len()];
            let t = s.congruence_word(4, support, 6);
            let a = t.word.eval_element().unwrap();
            let r = decompose(&a, support, 4).unwrap();
            if r.recompose().unwrap() != a || r.n_ij != t.n_ij || r.lambda_k != t.lambda_k {
                bad += 1;
            }
        }
        verdict(bad == 0, format!("100 words, {bad} mismatches"))
    })
}

/// Polynomial action computed independently: `x^a y^b` sends `x^g` to
/// `x^(g - b + a)` when `g >= b` componentwise and to 0 otherwise.
fn act(m: &SnMonomial, g: &[u32]) -> Option<Vec<u32>> {
    g.iter()
        .zip(m.alpha().iter().zip(m.beta()))
        .map(|(&gi, (&a, &b))| (gi >= b).then(|| gi - b + a))
        .collect()
}

fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| (0..=d).map(move |k| [v.clone(), vec![k]].concat()))
            .collect();
    }
    out.into_iter().filter(|v| v.iter().sum::<u32>() <= d).collect()
}

fn oracle_agreement() -> Verdict {
    let mut s = Sampler::new(7);
    let mut bad = 0;
    for k in 0..500 {
        let n = 1 + k % 3;
        let (a, b) = (s.monomial_of_degree(n, 5), s.monomial_of_degree(n, 5));
        let ab = &E::monomial(a.clone(), Q::one()) * &E::monomial(b.clone(), Q::one());
        for g in exponent_vectors(n, 8) {
            let composed = act(&b, &g).and_then(|h| act(&a, &h));
            let direct: Option<Vec<u32>> = match ab.terms().iter().collect::<Vec<_>>().as_slice() {
                [] => None,
                [(m, c)] if c.is_one() => act(m, &g),
                _ => {
                    bad += 1;
                    continue;
                }
            };
            if composed != direct {
                bad += 1;
            }
        }
    }
    verdict(bad == 0, format!("500 pairs at degree 8, {bad} disagreements"))
}

fn full_gl_classifier() -> Verdict {
    let mut s = Sampler::new(8);
    let mut bad = 0;
    for k in 0..50 {
        let (w, lambda) = s.full_word(2 + k % 3, 6);
        let (l, e) = decompose_full_gl(&w.eval().unwrap()).unwrap();
        let d = bdet(&e).unwrap();
        if l != lambda || !d.is_scalar() || !d.coeff.is_one() {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("50 words, {bad} mismatches"))
}

fn membership_criterion() -> Verdict {
    let mut s = Sampler::new(9);
    let n = 4;
    let supports = [set(&[1]), set(&[1, 2]), set(&[1, 2, 3])];
    let (mut false_negative, mut false_positive) = (0, 0);
    for k in 0..100 {
        let support = &supports[k % 3];
        let w = s.elementary_word(n, Some(support), 6);
        let a = w.eval_element().unwrap();
        if !is_elementary_product(&a, support, n).unwrap() {
            false_negative += 1;
        }
        let items: Vec<usize> = support.iter().copied().collect();
        let letter = if items.len() >= 2 && k % 2 == 0 {
            GeneratorToken::theta(items[1], items[0], set(&[items[0], items[1], n]), 1)
        } else {
            GeneratorToken::mu(set(&[items[k % items.len()], n]), s.nontrivial_scalar())
        };
        let b = &letter.eval_element(n).unwrap() * &a;
        if is_elementary_product(&b, support, n).unwrap() {
            false_positive += 1;
        }
    }
    verdict(
        false_negative == 0 && false_positive == 0,
        format!("100 words, {false_negative} rejected, {false_positive} extended words accepted"),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("identity replay", identity_replay),
        ("theta relations", theta_relations),
        ("degree table", degree_table),
        ("theta factorization", theta_factorization),
        ("generator count", generator_count),
        ("decomposition round trip", decomposition_round_trip),
        ("oracle agreement", oracle_agreement),
        ("K1 classifier", full_gl_classifier),
        ("membership criterion", membership_criterion),
    ];
    let mut failures = Vec::new();
    for (k, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {}: {name}: {}", k + 1, v.detail);
        if !v.passed {
            failures.push(k + 1);
        }
    }
    assert!(failures.is_empty(), "failing criteria: {failures:?}");
}
