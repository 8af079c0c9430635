//! The identity battery behind `symalg verify` and the acceptance tests. Every check is
//! exact and deterministic for a given seed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{AlgebraParams, SymbolElement};
use crate::error::{Error, Result};
use crate::fibonacci::{self, lemmas, GeneralNormVariant};
use crate::field::CycQ;
use crate::fixtures::FixtureFile;
use crate::repr::{gamma_mat, lambda_mat, reconstruct};
use crate::sampling::{standard_params, Sampler};
use crate::solver::{self, search, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Representations,
    Equations,
    Fibonacci,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Representations => "representations",
            Suite::Equations => "equations",
            Suite::Fibonacci => "fibonacci",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "representations" => Ok(Suite::Representations),
            "equations" => Ok(Suite::Equations),
            "fibonacci" => Ok(Suite::Fibonacci),
            other => Err(Error::Parse(format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub paper_ref: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub suite: Suite,
    pub nmax: u64,
    pub samples: usize,
    pub seed: u64,
    pub fixtures: FixtureFile,
}

impl Default for Config {
    fn default() -> Self {
        Config { suite: Suite::All, nmax: 30, samples: 50, seed: 7, fixtures: FixtureFile::builtin() }
    }
}

pub fn run(cfg: &Config) -> Report {
    let mut checks = Vec::new();
    if matches!(cfg.suite, Suite::All | Suite::Representations) {
        checks.extend(representation_checks(cfg.samples, cfg.seed, &cfg.fixtures));
    }
    if matches!(cfg.suite, Suite::All | Suite::Equations) {
        checks.extend(equation_checks(cfg.samples, cfg.seed));
    }
    if matches!(cfg.suite, Suite::All | Suite::Fibonacci) {
        checks.extend(fibonacci_checks(cfg.nmax));
    }
    Report { suite: cfg.suite, seed: cfg.seed, checks }
}

fn check(name: &str, statement: &str, pass: bool, detail: String) -> Check {
    Check { name: name.into(), paper_ref: statement.into(), pass, detail }
}

/// Runs `trial` on `samples` draws at each parameter choice. Each check gets its own stream
/// (`seed + salt`) so adding a check never perturbs the others.
fn battery(
    name: &str,
    statement: &str,
    seed: u64,
    salt: u64,
    params: &[AlgebraParams],
    samples: usize,
    mut trial: impl FnMut(&mut Sampler, &AlgebraParams) -> bool,
) -> Check {
    let mut rng = Sampler::new(seed.wrapping_add(salt));
    let mut failures = Vec::new();
    for p in params {
        for i in 0..samples {
            if !trial(&mut rng, p) {
                failures.push(format!("(a,b)=({},{}) sample {i}", p.a(), p.b()));
            }
        }
    }
    let total = samples * params.len();
    let detail = match failures.first() {
        None => format!("{total} samples over {} parameter choices", params.len()),
        Some(first) => format!("{} of {total} samples fail; first at {first}", failures.len()),
    };
    check(name, statement, failures.is_empty(), detail)
}

pub fn representation_checks(samples: usize, seed: u64, fixtures: &FixtureFile) -> Vec<Check> {
    let ps = standard_params();
    let unit = [AlgebraParams::unit()];
    let three = CycQ::from_int(3);
    let nine = CycQ::from_int(9);
    let mut out = vec![
        battery("left-multiplicative", "Lambda(z1 z2) = Lambda(z1) Lambda(z2)", seed, 1, &ps, samples, |r, p| {
            let (z1, z2) = (r.element(p), r.element(p));
            lambda_mat(&(&z1 * &z2)) == &lambda_mat(&z1) * &lambda_mat(&z2)
        }),
        battery("right-anti-multiplicative", "Gamma(z1 z2) = Gamma(z2) Gamma(z1)", seed, 2, &ps, samples, |r, p| {
            let (z1, z2) = (r.element(p), r.element(p));
            gamma_mat(&(&z1 * &z2)) == &gamma_mat(&z2) * &gamma_mat(&z1)
        }),
        battery("left-right-commute", "Lambda(A) Gamma(B) = Gamma(B) Lambda(A)", seed, 3, &ps, samples, |r, p| {
            let (l, g) = (lambda_mat(&r.element(p)), gamma_mat(&r.element(p)));
            &l * &g == &g * &l
        }),
        battery("left-determinant", "det Lambda(z) = eta(z)^3", seed, 4, &ps, samples, |r, p| {
            let z = r.element(p);
            lambda_mat(&z).det() == z.reduced_norm().pow(3)
        }),
        battery("left-trace", "tr Lambda(z) = 9 c0", seed, 5, &ps, samples, |r, p| {
            let z = r.element(p);
            lambda_mat(&z).trace() == &nine * z.coeff(0)
        }),
        battery("right-determinant", "det Gamma(z) = det Lambda(z)", seed, 6, &ps, samples, |r, p| {
            let z = r.element(p);
            gamma_mat(&z).det() == lambda_mat(&z).det()
        }),
        battery("adjoint-two-sided", "z z* = z* z = eta(z) 1", seed, 7, &ps, samples, |r, p| {
            let z = r.element(p);
            let (adj, eta) = (z.adjoint(), SymbolElement::scalar(p, z.reduced_norm()));
            &z * &adj == eta && &adj * &z == eta
        }),
        battery("double-adjoint", "z** = eta(z) z", seed, 8, &ps, samples, |r, p| {
            let z = r.element(p);
            z.adjoint().adjoint() == z.scale(&z.reduced_norm())
        }),
        battery("adjoint-reverses-products", "(z w)* = w* z*", seed, 9, &ps, samples, |r, p| {
            let (z, w) = (r.element(p), r.element(p));
            (&z * &w).adjoint() == &w.adjoint() * &z.adjoint()
        }),
        battery("quadratic-form-trace-of-adjoint", "pi(z) = tau(z*)", seed, 10, &ps, samples, |r, p| {
            let z = r.element(p);
            z.pi_form() == z.adjoint().reduced_trace()
        }),
        battery("quadratic-form-from-traces", "2 pi(z) = tau(z)^2 - tau(z^2)", seed, 11, &ps, samples, |r, p| {
            let z = r.element(p);
            CycQ::from_int(2) * z.pi_form() == z.reduced_trace().pow(2) - (&z * &z).reduced_trace()
        }),
        battery("quadratic-form-symmetric", "pi(z w) = pi(w z)", seed, 12, &ps, samples, |r, p| {
            let (z, w) = (r.element(p), r.element(p));
            (&z * &w).pi_form() == (&w * &z).pi_form()
        }),
        battery("cayley-hamilton", "z^3 - tau z^2 + pi z - eta = 0", seed, 13, &ps, samples, |r, p| {
            let z = r.element(p);
            let cd = z.char_poly();
            let z2 = &z * &z;
            let lhs = &(&z2 * &z) - &z2.scale(&cd.tau) + z.scale(&cd.pi) - SymbolElement::scalar(p, cd.eta);
            lhs.is_zero()
        }),
        battery(
            "twist-invariance",
            "det Lambda(z) = det Lambda(z_w) = det Lambda(z_w2), and likewise for Gamma, at a = b = 1",
            seed,
            14,
            &unit,
            samples,
            |r, p| {
                let z = r.element(p);
                let (z1, z2) = (z.twist(1), z.twist(2));
                let dl = lambda_mat(&z).det();
                let dg = gamma_mat(&z).det();
                dl == lambda_mat(&z1).det()
                    && dl == lambda_mat(&z2).det()
                    && dg == gamma_mat(&z1).det()
                    && dg == gamma_mat(&z2).det()
            },
        ),
        battery(
            "reconstruction",
            "M Lambda(z) N = M' Gamma(z)^t N' = 3z",
            seed,
            15,
            &ps,
            samples,
            |r, p| {
                let z = r.element(p);
                reconstruct(&z) == Ok(z.scale(&three))
            },
        ),
    ];
    out.push(printed_matrix_check(fixtures));
    out
}

fn printed_matrix_check(fixtures: &FixtureFile) -> Check {
    let statement = "printed 9x9 representation matrices agree with the generated ones outside the documented cells";
    match fixtures.compare_all() {
        Err(e) => check("printed-matrices", statement, false, format!("fixture error: {e}")),
        Ok(results) => {
            let bad: Vec<&str> = results.iter().filter(|r| !r.matches_documentation).map(|r| r.name.as_str()).collect();
            let documented: usize = results.iter().map(|r| r.mismatches.len()).sum();
            let detail = if bad.is_empty() {
                format!("{} matrices; {documented} documented misprinted cells", results.len())
            } else {
                format!("undocumented differences in: {}", bad.join(", "))
            };
            check("printed-matrices", statement, bad.is_empty(), detail)
        }
    }
}

pub fn equation_checks(samples: usize, seed: u64) -> Vec<Check> {
    let ps = standard_params();
    let mut out = vec![
        battery("intertwiner-singular", "det(Lambda(A) - Gamma(A)) = 0", seed, 21, &ps, samples, |r, p| {
            let a = r.element(p);
            solver::intertwining_operator(&a, &a).map(|m| m.det().is_zero()).unwrap_or(false)
        }),
        battery(
            "sylvester-round-trip",
            "AZ - ZB = AW - WB recovers W, uniquely when det(Lambda(A) - Gamma(B)) != 0",
            seed,
            22,
            &ps,
            samples,
            |r, p| {
                let (a, b, w) = (r.element(p), r.element(p), r.element(p));
                let c = &(&a * &w) - &(&w * &b);
                let Ok(sol) = solver::solve_sylvester(&a, &b, &c) else {
                    return false;
                };
                let regular = solver::intertwining_operator(&a, &b).map(|m| !m.det().is_zero()).unwrap_or(false);
                if regular {
                    sol.verdict == Verdict::Unique && sol.particular.as_ref() == Some(&w)
                } else {
                    sol.contains(&w)
                }
            },
        ),
        battery(
            "similar-elements-intertwine",
            "an invertible W with AW = WB exists when B = W^-1 A W, and then tau and eta agree",
            seed,
            23,
            &ps,
            samples,
            |r, p| {
                let a = r.element(p);
                let w = r.element(p);
                let Ok(w_inv) = w.inverse() else {
                    return true;
                };
                let b = &(&w_inv * &a) * &w;
                match solver::solve_intertwine(&a, &b) {
                    Ok(res) => {
                        res.solutions.contains(&w)
                            && !res.invertible.is_empty()
                            && res.invertible.iter().all(|c| c.traces_equal && c.norms_equal)
                    }
                    Err(_) => false,
                }
            },
        ),
    ];
    out.push(centralizer_check());
    out.push(structured_check());
    out
}

fn centralizer_check() -> Check {
    let mut bad = Vec::new();
    for p in standard_params() {
        let x = SymbolElement::x(&p);
        let s = solver::solve_commute(&x);
        let span = [SymbolElement::one(&p), x.clone(), &x * &x];
        if s.dimension() != 3 || !span.iter().all(|z| s.contains(z)) || s.contains(&SymbolElement::y(&p)) {
            bad.push(format!("({},{}) dimension {}", p.a(), p.b(), s.dimension()));
        }
    }
    let detail = if bad.is_empty() { "kernel = span{1, x, x^2} at all three parameter choices".into() } else { bad.join("; ") };
    check("centralizer-of-x", "the centralizer of x is span{1, x, x^2}", bad.is_empty(), detail)
}

/// Pure-part bound of the search for explicit-intertwiner instances.
pub const STRUCTURED_SEARCH_BOUND: i64 = 2;

fn structured_check() -> Check {
    let statement = "for A0, B0 of zero norm with equal nonzero pi, X1 = A0 + B0 and X2 = pi - A0 B0 solve AZ = ZB and are independent";
    let Some(inst) = search::find_structured_instance(STRUCTURED_SEARCH_BOUND) else {
        return check("structured-intertwiners", statement, false, "no instance in the search box".into());
    };
    let (a, b) = inst.elements(&CycQ::one());
    let where_ = format!("A0 = {:?}, B0 = {:?}, pi = {}", inst.pure_a, inst.pure_b, inst.pi);
    match solver::structured_solutions(&a, &b) {
        Ok(_) => check("structured-intertwiners", statement, true, where_),
        Err(e) => {
            let kernel = solver::solve_intertwine(&a, &b).map(|r| r.solutions.dimension()).unwrap_or(0);
            let pair = solver::structured_candidates(&a, &b).expect("same params");
            let a0 = a.pure_part();
            let b0 = b.pure_part();
            let squares_equal = &a0 * &a0 == &b0 * &b0;
            let detail = format!(
                "{where_}: {e}; solution space of AZ = ZB has dimension {kernel}; X1 {} in it, X2 {} in it; A0^2 = B0^2 is {squares_equal}",
                if (&a * &pair.x1) == (&pair.x1 * &b) { "is" } else { "is not" },
                if (&a * &pair.x2) == (&pair.x2 * &b) { "is" } else { "is not" },
            );
            check("structured-intertwiners", statement, false, detail)
        }
    }
}

pub fn fibonacci_checks(nmax: u64) -> Vec<Check> {
    let mut out: Vec<Check> = fibonacci::fib_identity_suite(nmax)
        .into_iter()
        .map(|c| {
            let detail = match c.first_failure {
                None => format!("1 <= n <= {nmax}"),
                Some(n) => format!("fails at n = {n}"),
            };
            check(&format!("fibonacci-{}", c.name), c.statement, c.pass, detail)
        })
        .collect();
    out.push(closed_form_check(nmax));
    for o in lemmas::lemma_suite(nmax) {
        out.push(lemma_check(&o, nmax));
    }
    out.push(general_norm_check(nmax.min(10)));
    let scan = fibonacci::invertibility_scan(nmax);
    out.push(check(
        "fibonacci-invertible",
        "eta(F_n) != 0 and F_n F_n^-1 = 1 at a = b = 1",
        scan.all_invertible && scan.all_inverses_verified,
        format!("0 <= n <= {nmax}"),
    ));
    out.push(check(
        "fibonacci-omega-free-positive",
        "the w-free part of the printed closed form is positive",
        scan.omega_free_positive,
        format!("0 <= n <= {nmax}"),
    ));
    out
}

fn closed_form_check(nmax: u64) -> Check {
    let unit = AlgebraParams::unit();
    let bad: Vec<u64> =
        (0..=nmax).filter(|&n| fibonacci::closed_form_norm(n, &unit) != Ok(fibonacci::norm_oracle(n))).collect();
    let printed_ok = (0..=nmax).filter(|&n| fibonacci::printed_closed_form_norm(n) == fibonacci::norm_oracle(n)).count();
    let changed: Vec<String> = lemmas::PRINTED_CLOSED_FORM
        .iter()
        .zip(lemmas::PINNED_CLOSED_FORM)
        .filter(|(p, q)| **p != *q)
        .map(|(p, q)| format!("{p}->{q}"))
        .collect();
    let detail = format!(
        "0 <= n <= {nmax}; {} mismatches; pinned constants {}; printed constants agree at {printed_ok} of {} values",
        bad.len(),
        changed.join(" "),
        nmax + 1
    );
    check("fibonacci-closed-form-norm", "closed form of eta(F_n) equals the reduced norm", bad.is_empty(), detail)
}

fn lemma_check(o: &lemmas::LemmaOutcome, nmax: u64) -> Check {
    let detail = if o.holds_as_printed() {
        format!("holds as printed for 1 <= n <= {nmax}")
    } else {
        match &o.correction {
            None => format!("fails at {} values; no correction found", o.failures.len()),
            Some(c) => {
                let mut parts = Vec::new();
                if let Some(l) = &c.left {
                    parts.push(format!("linear factor -> ({}) f[n+2] + ({}) f[n+3]", l[0], l[1]));
                }
                parts.extend(c.changes.iter().map(|ch| format!("#{}: {} -> {}", ch.index, ch.printed, ch.corrected)));
                format!(
                    "printed form fails at {} values; corrected ({}; {} tied edits) {}",
                    o.failures.len(),
                    parts.join(", "),
                    c.ties,
                    if o.verified { "holds" } else { "still fails" }
                )
            }
        }
    };
    check(&format!("lemma-{}", o.id), &o.lhs, o.resolved(), detail)
}

fn general_norm_check(nmax: u64) -> Check {
    let choices = [CycQ::one(), CycQ::from_int(2), CycQ::from_int(3), CycQ::omega(), CycQ::from_ints(1, 1)];
    let mut bad = Vec::new();
    for a in &choices {
        let p = AlgebraParams::new(a.clone(), CycQ::one()).expect("nonzero");
        for n in 0..=nmax {
            let oracle = fibonacci::fib_element(n, &p).reduced_norm();
            if fibonacci::general_norm(n, a, GeneralNormVariant::Corrected) != oracle {
                bad.push(format!("a={a} n={n}"));
            }
        }
    }
    let printed_ok =
        (0..=nmax).filter(|&n| fibonacci::general_norm(n, &CycQ::one(), GeneralNormVariant::Printed) == fibonacci::norm_oracle(n)).count();
    let detail = format!(
        "a in {{1, 2, 3, w, 1+w}}, b = 1, 0 <= n <= {nmax}; {} mismatches; printed formula agrees at a = 1 for {printed_ok} of {} values",
        bad.len(),
        nmax + 1
    );
    check("fibonacci-general-norm", "eta(F_n) = a^2 P2(n) + a P1(n) + P0(n) at b = 1", bad.is_empty(), detail)
}
