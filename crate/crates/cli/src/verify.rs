//! Verification suites: each check re-proves an identity at small scale and
//! records which library operations it exercised.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use schurforge::exact::{neg_log_derivative, rat, BigInt, LaurentZ, MatrixQ, Rational, Series};
use schurforge::lambda::{
    adams_on_base, adams_on_witt, ghost, special_check, universal_composition_poly, universal_product_poly, witt_add,
    witt_mul, witt_neg, LambdaRing, WittSeries,
};
use schurforge::partition::{dim_poly_eval, partitions_of, partitions_up_to, Partition};
use schurforge::repring::{
    alt_series, aw_check, complex_class, euler_xi, ev, g_map, h_map, induction_product, k0_class, lambda_of_class,
    lambda_sigma, lambda_sigma_complex, lambda_sigma_complex_direct, mu_series, schur_class, sym_series, K0Class,
    RDElement,
};
use schurforge::symfunc::{ch, from_powersum, lr, mul, newton_check, schur_to_powersum, vanishing_schur_sum, SymFunc};
use schurforge::symgroup::{
    character, character_table, isotypic_projector, GroupAlgebraElement, Permutation, SpechtModule,
};
use schurforge::tensor::{
    categorical_trace, char_series, class_function_trace, equivariant_kernel, schur_object, sym_action,
    tensor_power_trace, trace_schur, ComplexObject, FiniteGroup, GComplex, GObject, GradedMap, GradedObject,
};
use schurforge::{Error, Result};

pub const SUITES: [&str; 8] = ["partitions", "characters", "symfunc", "witt", "schur", "adams", "complexes", "repring"];

/// Every public operation a full run is expected to exercise.
const OPERATIONS: [&str; 47] = [
    "exact.series_mul",
    "exact.series_inv",
    "exact.neg_log_derivative",
    "exact.rank",
    "partition.partitions_of",
    "partition.conjugate",
    "partition.dim_poly_eval",
    "symgroup.cycle_type",
    "symgroup.character",
    "symgroup.character_table",
    "symgroup.isotypic_projector",
    "symfunc.schur_to_powersum",
    "symfunc.mul",
    "symfunc.lr",
    "symfunc.newton_check",
    "symfunc.vanishing_schur_sum",
    "symfunc.ch",
    "lambda.witt_add",
    "lambda.witt_neg",
    "lambda.witt_mul",
    "lambda.universal_product_poly",
    "lambda.universal_composition_poly",
    "lambda.ghost",
    "lambda.adams_on_witt",
    "lambda.adams_on_base",
    "lambda.special_check",
    "tensor.tensor",
    "tensor.sym_action",
    "tensor.schur_object",
    "tensor.categorical_trace",
    "tensor.trace_schur",
    "tensor.char_series",
    "tensor.equivariant_kernel",
    "tensor.cohomology",
    "tensor.gr_s",
    "tensor.gr_tau",
    "repring.k0_class",
    "repring.lambda_of_class",
    "repring.lambda_sigma",
    "repring.ev",
    "repring.induction_product",
    "repring.h_map",
    "repring.g_map",
    "repring.mu_series",
    "repring.euler_xi",
    "repring.aw_check",
    "cli.verify",
];

pub struct Ctx {
    seed: u64,
    bound: usize,
}

impl Ctx {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

struct Check {
    suite: &'static str,
    name: &'static str,
    identity: &'static str,
    covers: &'static [&'static str],
    run: fn(&Ctx) -> Result<bool>,
}

struct Outcome {
    check: &'static Check,
    result: std::result::Result<bool, String>,
}

pub struct Report {
    suite: String,
    outcomes: Vec<Outcome>,
}

pub fn run(suite: &str, seed: u64, bound: usize) -> Result<Report> {
    if suite != "all" && !SUITES.contains(&suite) {
        return Err(Error::Parse(format!("unknown suite {suite:?}; expected one of {} or all", SUITES.join(", "))));
    }
    let ctx = Ctx { seed, bound };
    let outcomes = CHECKS
        .iter()
        .filter(|c| suite == "all" || c.suite == suite)
        .map(|check| Outcome { check, result: (check.run)(&ctx).map_err(|e| e.to_string()) })
        .collect();
    Ok(Report { suite: suite.to_string(), outcomes })
}

impl Report {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.result == Ok(true))
    }

    fn covered(&self) -> BTreeSet<&'static str> {
        let mut out: BTreeSet<&'static str> = self.outcomes.iter().flat_map(|o| o.check.covers.iter().copied()).collect();
        out.insert("cli.verify");
        out
    }

    pub fn lines(&self, json_mode: bool) -> Vec<(String, Value)> {
        let mut out = Vec::new();
        for o in &self.outcomes {
            let (status, detail) = match &o.result {
                Ok(true) => ("PASS", String::new()),
                Ok(false) => ("FAIL", String::new()),
                Err(e) => ("FAIL", format!(" error: {e}")),
            };
            out.push((
                format!("{status}  {}/{}  {}{detail}", o.check.suite, o.check.name, o.check.identity),
                json!({ "suite": o.check.suite, "check": o.check.name, "status": status,
                        "identity": o.check.identity, "error": o.result.as_ref().err() }),
            ));
        }
        let mut per_suite: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for o in &self.outcomes {
            let e = per_suite.entry(o.check.suite).or_default();
            e.1 += 1;
            if o.result == Ok(true) {
                e.0 += 1;
            }
        }
        for s in SUITES.iter().filter(|s| per_suite.contains_key(*s)) {
            let (p, t) = per_suite[s];
            out.push((format!("suite {s}: {p}/{t} passed"), json!({ "suite": s, "passed": p, "total": t })));
        }
        let covered = self.covered();
        let missing: Vec<&str> = OPERATIONS.iter().copied().filter(|op| !covered.contains(op)).collect();
        let text = if self.suite == "all" {
            format!("coverage: {}/{} operations", OPERATIONS.len() - missing.len(), OPERATIONS.len())
        } else {
            format!("coverage: {} operations", covered.len())
        };
        if json_mode || self.suite == "all" {
            out.push((text, json!({ "coverage": covered, "missing": if self.suite == "all" { json!(missing) } else { Value::Null } })));
        }
        out
    }
}

fn b(ok: bool) -> Result<bool> {
    Ok(ok)
}

fn g(s: &str) -> GradedObject {
    s.parse().expect("valid literal")
}

fn l(s: &str) -> K0Class {
    s.parse().expect("valid literal")
}

fn p(s: &str) -> Partition {
    s.parse().expect("valid literal")
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn random_series(rng: &mut ChaCha8Rng, order: usize) -> WittSeries<Rational> {
    let mut c = vec![Rational::one()];
    for _ in 0..order {
        c.push(rat(rng.gen_range(-3..=3), rng.gen_range(1..=3)));
    }
    WittSeries::new(Series::new(c, order)).expect("unit constant term")
}

fn random_endo(rng: &mut ChaCha8Rng, x: &GradedObject) -> GradedMap {
    let blocks = x
        .dims()
        .map(|(d, m)| {
            let mut block = MatrixQ::zeros(m, m);
            for i in 0..m {
                for j in 0..m {
                    block.set(i, j, rat(rng.gen_range(-2..=2), rng.gen_range(1..=2)));
                }
            }
            (d, block)
        })
        .collect();
    GradedMap::endomorphism(x, blocks).expect("square blocks")
}

fn random_object(rng: &mut ChaCha8Rng, max_dim: usize) -> GradedObject {
    let dim = rng.gen_range(1..=max_dim);
    let mut dims = BTreeMap::new();
    for _ in 0..dim {
        *dims.entry(rng.gen_range(-1..=2)).or_insert(0) += 1;
    }
    GradedObject::new(dims)
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images(v).expect("a permutation")
}

fn cycle_rep(mu: &Partition) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 1;
    for &r in mu.parts() {
        cycles.push((next..next + r).collect::<Vec<_>>());
        next += r;
    }
    Permutation::from_cycles(&cycles, mu.size()).expect("disjoint cycles")
}

fn samples() -> Vec<K0Class> {
    ["1", "2", "q", "1 - q", "1 + q^2"].iter().map(|s| l(s)).collect()
}

fn special_samples() -> Vec<K0Class> {
    ["q", "1 + q^2", "1 - q", "2*q - q^-1"].iter().map(|s| l(s)).collect()
}

fn presets() -> Result<Vec<GObject>> {
    ["perm:sym3", "signperm:sym3", "reg:cyc4"].iter().map(|s| GObject::preset(s)).collect()
}

fn alternate<A: schurforge::exact::Ring>(s: &Series<A>) -> Series<A> {
    Series::new(
        s.coeffs().iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() }).collect(),
        s.order(),
    )
}

// partitions

fn pentagonal_counts(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::one()];
    for m in 1..=n as i64 {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[(m - g1) as usize] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += &p[(m - g2) as usize] * sign;
            }
        }
        p.push(acc);
    }
    p
}

fn partition_counts(_: &Ctx) -> Result<bool> {
    let expected = pentagonal_counts(12);
    b((0..=12).all(|n| BigInt::from(partitions_of(n).len()) == expected[n]))
}

fn conjugation(_: &Ctx) -> Result<bool> {
    b((0..=10).all(|n| {
        partitions_of(n).iter().all(|pi| pi.conjugate().size() == n && pi.conjugate().conjugate() == *pi)
    }))
}

fn row_column_dims(_: &Ctx) -> Result<bool> {
    for n in 1..=6usize {
        for m in 0..=6i64 {
            let ni = n as i64;
            if dim_poly_eval(&Partition::row(n), m) != binom(m + ni - 1, ni)
                || dim_poly_eval(&Partition::column(n), m) != binom(m, ni)
            {
                return b(false);
            }
        }
    }
    b(true)
}

fn dimension_count(_: &Ctx) -> Result<bool> {
    for n in 0..=4usize {
        for m in 0..=4i64 {
            let total: BigInt =
                partitions_of(n).iter().map(|pi| dim_poly_eval(pi, m) * pi.num_standard_tableaux()).sum();
            if total != BigInt::from(m).pow(n as u32) {
                return b(false);
            }
        }
    }
    b(true)
}

// characters

fn degrees_squared(_: &Ctx) -> Result<bool> {
    for n in 0..=6usize {
        let t = character_table(n)?;
        let sq: BigInt = t.partitions().iter().map(|q| BigInt::from(t.degree(q)).pow(2)).sum();
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        if sq != fact {
            return b(false);
        }
    }
    b(true)
}

fn orthogonality(_: &Ctx) -> Result<bool> {
    for n in [5usize, 6] {
        let t = character_table(n)?;
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let k = t.partitions().len();
        for i in 0..k {
            for j in 0..k {
                let row: BigInt =
                    (0..k).map(|c| &t.class_sizes()[c] * BigInt::from(t.row(i)[c] * t.row(j)[c])).sum();
                let col: BigInt = (0..k).map(|r| BigInt::from(t.row(r)[i] * t.row(r)[j])).sum();
                let want_row = if i == j { fact.clone() } else { BigInt::zero() };
                let want_col = if i == j { t.partitions()[i].z() } else { BigInt::zero() };
                if row != want_row || col != want_col || character(&t.partitions()[i], &t.partitions()[j])? != t.row(i)[j] {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn specht_traces(_: &Ctx) -> Result<bool> {
    for n in 1..=4 {
        for pi in partitions_of(n) {
            let v = SpechtModule::new(&pi);
            for mu in partitions_of(n) {
                if v.trace(&cycle_rep(&mu)) != Rational::from_integer(character(&pi, &mu)?.into()) {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn projectors_idempotent(_: &Ctx) -> Result<bool> {
    for n in 1..=5 {
        for pi in partitions_of(n) {
            let e = isotypic_projector(&pi)?;
            if &e * &e != e {
                return b(false);
            }
        }
    }
    b(true)
}

fn projectors_orthogonal(_: &Ctx) -> Result<bool> {
    for n in 1..=4 {
        let ps: Vec<GroupAlgebraElement> = partitions_of(n).iter().map(isotypic_projector).collect::<Result<_>>()?;
        let mut sum = GroupAlgebraElement::zero(n);
        for (i, a) in ps.iter().enumerate() {
            sum = &sum + a;
            for (j, c) in ps.iter().enumerate() {
                if i != j && !(a * c).is_zero() {
                    return b(false);
                }
            }
        }
        if sum != GroupAlgebraElement::one(n) {
            return b(false);
        }
    }
    b(true)
}

fn rank_equals_trace(_: &Ctx) -> Result<bool> {
    for n in 1..=4 {
        for pi in partitions_of(n) {
            let m = isotypic_projector(&pi)?.left_regular_matrix();
            let d = SpechtModule::new(&pi).dim();
            if Rational::from_integer(m.rank().into()) != m.trace() || m.rank() != d * d {
                return b(false);
            }
        }
    }
    b(true)
}

fn cycle_types(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..50 {
        let n = rng.gen_range(1..=7);
        let (s, h) = (random_permutation(&mut rng, n), random_permutation(&mut rng, n));
        let conj = h.compose(&s).compose(&h.inverse());
        if conj.cycle_type() != s.cycle_type() || s.cycle_type().size() != n {
            return b(false);
        }
    }
    b(true)
}

// symfunc

fn newton(_: &Ctx) -> Result<bool> {
    b((1..=8).all(newton_check))
}

fn vanishing(_: &Ctx) -> Result<bool> {
    b(partitions_up_to(4).iter().filter(|q| !q.is_empty()).all(|q| vanishing_schur_sum(q).is_zero()))
}

fn lr_commutative(_: &Ctx) -> Result<bool> {
    for mu in partitions_up_to(6) {
        for eta in partitions_up_to(6 - mu.size()) {
            for pi in partitions_of(mu.size() + eta.size()) {
                if lr(&mu, &eta, &pi) != lr(&eta, &mu, &pi) {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn mul_associative(_: &Ctx) -> Result<bool> {
    let ps: Vec<Partition> = partitions_up_to(4).into_iter().filter(|q| !q.is_empty()).collect();
    for a in &ps {
        for c in &ps {
            for d in &ps {
                if a.size() + c.size() + d.size() > 6 {
                    continue;
                }
                let (x, y, z) = (SymFunc::schur(a.clone()), SymFunc::schur(c.clone()), SymFunc::schur(d.clone()));
                if mul(&mul(&x, &y), &z) != mul(&x, &mul(&y, &z)) {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn omega_duality(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for n in 0..=5 {
        let mut f = SymFunc::zero();
        for pi in partitions_of(n) {
            f.add_term(pi, rat(rng.gen_range(-3..=3), 1));
        }
        let w = f.omega();
        if partitions_of(n).iter().any(|pi| w.coeff(&pi.conjugate()) != f.coeff(pi)) {
            return b(false);
        }
    }
    b(true)
}

fn specht_values(pi: &Partition) -> BTreeMap<Partition, Rational> {
    let v = SpechtModule::new(pi);
    partitions_of(pi.size()).into_iter().map(|mu| (mu.clone(), v.trace(&cycle_rep(&mu)))).collect()
}

fn ch_of_specht(_: &Ctx) -> Result<bool> {
    for n in 0..=4 {
        for pi in partitions_of(n) {
            if ch(n, &specht_values(&pi))? != SymFunc::schur(pi.clone()) {
                return b(false);
            }
        }
    }
    b(true)
}

fn remove_parts(nu: &Partition, alpha: &[usize]) -> Partition {
    let mut rest = nu.parts().to_vec();
    for a in alpha {
        let i = rest.iter().position(|r| r == a).expect("sub-multiset");
        rest.remove(i);
    }
    Partition::from_unsorted(rest)
}

/// `Ind(χ_μ × χ_η)(ν) = Σ z_ν / (z_α z_β) χ_μ(α) χ_η(β)` over `α ∪ β = ν`.
fn induced_character(mu: &Partition, eta: &Partition, nu: &Partition) -> Result<Rational> {
    let parts = nu.parts();
    let mut splits = BTreeSet::new();
    for mask in 0u32..(1 << parts.len()) {
        let alpha: Vec<usize> = (0..parts.len()).filter(|i| mask & (1 << i) != 0).map(|i| parts[i]).collect();
        if alpha.iter().sum::<usize>() == mu.size() {
            splits.insert(Partition::from_unsorted(alpha));
        }
    }
    let mut out = Rational::zero();
    for alpha in splits {
        let beta = remove_parts(nu, alpha.parts());
        let w = Rational::new(nu.z(), alpha.z() * beta.z());
        out += w * Rational::from_integer((character(mu, &alpha)? * character(eta, &beta)?).into());
    }
    Ok(out)
}

fn ch_intertwines_induction(_: &Ctx) -> Result<bool> {
    for mu in partitions_up_to(4) {
        for eta in partitions_up_to(5 - mu.size()) {
            let n = mu.size() + eta.size();
            let values = partitions_of(n)
                .into_iter()
                .map(|nu| Ok((nu.clone(), induced_character(&mu, &eta, &nu)?)))
                .collect::<Result<BTreeMap<_, _>>>()?;
            if ch(n, &values)? != mul(&SymFunc::schur(mu.clone()), &SymFunc::schur(eta.clone())) {
                return b(false);
            }
        }
    }
    b(true)
}

fn powersum_transition(_: &Ctx) -> Result<bool> {
    let e2 = schur_to_powersum(&p("1,1"));
    let h2 = schur_to_powersum(&p("2"));
    let small = e2 == BTreeMap::from([(p("1,1"), rat(1, 2)), (p("2"), rat(-1, 2))])
        && h2 == BTreeMap::from([(p("1,1"), rat(1, 2)), (p("2"), rat(1, 2))]);
    b(small && partitions_up_to(6).iter().all(|q| from_powersum(&schur_to_powersum(q)) == SymFunc::schur(q.clone())))
}

// witt

fn witt_ring_axioms(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..8 {
        let (f, h, k) = (random_series(&mut rng, 3), random_series(&mut rng, 3), random_series(&mut rng, 3));
        let one = WittSeries::linear(Rational::one(), 3);
        let ok = witt_mul(&f, &h)? == witt_mul(&h, &f)?
            && witt_mul(&witt_mul(&f, &h)?, &k)? == witt_mul(&f, &witt_mul(&h, &k)?)?
            && witt_mul(&f, &witt_add(&h, &k))? == witt_add(&witt_mul(&f, &h)?, &witt_mul(&f, &k)?)
            && witt_mul(&f, &one)? == f
            && witt_add(&f, &witt_neg(&f)) == WittSeries::one(3)
            && witt_add(&f, &h) == witt_add(&h, &f);
        if !ok {
            return b(false);
        }
    }
    b(true)
}

fn ghost_components(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    let rank_one = ghost(&WittSeries::linear(rat(2, 1), 4)) == vec![rat(2, 1), rat(4, 1), rat(8, 1), rat(16, 1)];
    for _ in 0..8 {
        let (f, h) = (random_series(&mut rng, 4), random_series(&mut rng, 4));
        let (gf, gh) = (ghost(&f), ghost(&h));
        let sum: Vec<Rational> = gf.iter().zip(&gh).map(|(a, c)| a + c).collect();
        let prod: Vec<Rational> = gf.iter().zip(&gh).map(|(a, c)| a * c).collect();
        if ghost(&witt_add(&f, &h)) != sum || ghost(&witt_mul(&f, &h)?) != prod {
            return b(false);
        }
    }
    b(rank_one)
}

fn frobenius(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..6 {
        let f = random_series(&mut rng, 12);
        let gf = ghost(&f);
        for n in 1..=4 {
            let gp = ghost(&adams_on_witt(&f, n)?);
            if (1..=gp.len()).any(|m| gp[m - 1] != gf[n * m - 1]) {
                return b(false);
            }
        }
        let lhs = adams_on_witt(&adams_on_witt(&f, 3)?, 2)?;
        if lhs != adams_on_witt(&f, 6)? {
            return b(false);
        }
    }
    b(true)
}

fn universal_polys(_: &Ctx) -> Result<bool> {
    let p2 = universal_product_poly(2)?;
    let explicit = p2.coeff(&[2, 0], &[0, 1]) == BigInt::from(1)
        && p2.coeff(&[0, 1], &[2, 0]) == BigInt::from(1)
        && p2.coeff(&[0, 1], &[0, 1]) == BigInt::from(-2)
        && p2.terms().count() == 3;
    let c22 = universal_composition_poly(2, 2)?;
    let ones: Vec<Rational> = (1..=4).map(|k| Rational::from_integer(binom(4, k))).collect();
    let rank_one = p2.eval(&[rat(3, 1), Rational::zero()], &[rat(5, 1), Rational::zero()]).is_zero();
    b(explicit && rank_one && c22.eval(&ones, &[]) == rat(15, 1))
}

fn base_adams(_: &Ctx) -> Result<bool> {
    for x in special_samples().into_iter().chain(samples()) {
        for n in 1..=4 {
            let via_witt = adams_on_witt(&x.lambda_witt(n), n)?.coeff(1);
            let frob = x.substitute_power(n as i64);
            if adams_on_base(&x, n) != via_witt || adams_on_base(&x, n) != frob {
                return b(false);
            }
        }
    }
    b(adams_on_base(&BigInt::from(7), 3) == BigInt::from(7))
}

fn specialness(_: &Ctx) -> Result<bool> {
    for x in special_samples() {
        for y in special_samples() {
            if !special_check(&x, &y, 2, 1)? || !special_check(&x, &y, 2, 2)? {
                return b(false);
            }
        }
    }
    b(true)
}

fn lambda_negation(_: &Ctx) -> Result<bool> {
    b(special_samples().into_iter().chain(samples()).all(|x| {
        lambda_of_class(&x, 6).series().mul_series(lambda_of_class(&-x, 6).series()).is_one()
    }))
}

fn series_identities(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..8 {
        let f = random_series(&mut rng, 6).into_series();
        let h = random_series(&mut rng, 6).into_series();
        let inv = f.inverse()?;
        let fh = f.mul_series(&h);
        let additive = neg_log_derivative(&fh)?.add_series(&Series::zero(6))
            == neg_log_derivative(&f)?.add_series(&neg_log_derivative(&h)?);
        if !f.mul_series(&inv).is_one() || !inv.mul_series(&f).is_one() || !additive {
            return b(false);
        }
    }
    b(true)
}

// schur

fn hook_content(_: &Ctx) -> Result<bool> {
    for pi in partitions_up_to(4) {
        for d in 0..=4usize {
            let s = schur_object(&GradedObject::even(d), &pi, 1 << 10)?;
            if BigInt::from(s.total_dim()) != dim_poly_eval(&pi, d as i64) {
                return b(false);
            }
        }
    }
    b(true)
}

fn isotypic_completeness(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..6 {
        let x = random_object(&mut rng, 3);
        for n in 1..=4 {
            if !aw_check(&x, n, ctx.bound)? {
                return b(false);
            }
        }
    }
    b(true)
}

fn cycle_factorization(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..10 {
        let x = random_object(&mut rng, 3);
        let f = random_endo(&mut rng, &x);
        let n = rng.gen_range(1..=5);
        let s = random_permutation(&mut rng, n);
        let lhs: Rational = tensor_power_trace(&f, &s, ctx.bound)?.values().sum();
        let mut rhs = Rational::one();
        for c in s.cycles() {
            rhs *= categorical_trace(&f.pow(c.len() as u32)?)?;
        }
        if lhs != rhs {
            return b(false);
        }
    }
    b(true)
}

fn tensor_products(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..10 {
        let (x, y) = (random_object(&mut rng, 3), random_object(&mut rng, 3));
        let (f, h) = (random_endo(&mut rng, &x), random_endo(&mut rng, &y));
        let xy = x.tensor(&y);
        if xy.total_dim() != x.total_dim() * y.total_dim()
            || k0_class(&xy) != k0_class(&x) * k0_class(&y)
            || categorical_trace(&f.tensor(&h))? != categorical_trace(&f)? * categorical_trace(&h)?
        {
            return b(false);
        }
    }
    let a = GObject::preset("perm:sym3")?;
    let s = GObject::preset("sign:sym3")?;
    let t = a.tensor(&s)?;
    for el in a.group().elements() {
        let lhs = categorical_trace(t.action(el)?)?;
        if lhs != categorical_trace(a.action(el)?)? * categorical_trace(s.action(el)?)? {
            return b(false);
        }
    }
    b(true)
}

fn sym_actions(ctx: &Ctx) -> Result<bool> {
    let sq = sym_action(&GradedObject::even(2), 2, ctx.bound)?;
    let want = RDElement::basis(p("2"), l("3")) + RDElement::basis(p("1,1"), l("1"));
    let odd = sym_action(&GradedObject::line(1), 2, ctx.bound)?;
    b(g_map(&sq)? == want && g_map(&odd)? == RDElement::basis(p("1,1"), l("q^2")))
}

fn equivariant_kernels(_: &Ctx) -> Result<bool> {
    let x = GObject::preset("perm:sym3")?;
    let line = GObject::trivial(GradedObject::even(1), x.group().clone());
    let sum = GradedMap::from_matrix(x.object(), line.object(), &MatrixQ::from_i64_rows(&[&[1, 1, 1]]))?;
    let k = equivariant_kernel(&x, &line, &sum)?;
    b(g_map(&k)? == RDElement::basis(p("2,1"), l("1")))
}

fn schur_traces(_: &Ctx) -> Result<bool> {
    for x in presets()? {
        let els = x.group().elements();
        for el in els {
            for pi in partitions_up_to(3).into_iter().filter(|q| !q.is_empty()) {
                // s_π at the eigenvalues of g, through power sums p_k = tr(g^k)
                let mut want = Rational::zero();
                for mu in partitions_of(pi.size()) {
                    let mut term = Rational::new(character(&pi, &mu)?.into(), mu.z());
                    for &r in mu.parts() {
                        term *= categorical_trace(x.action(&el.pow(r))?)?;
                    }
                    want += term;
                }
                if trace_schur(&x, el, &pi, 1 << 10)? != want {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

// adams

fn ghost_traces(ctx: &Ctx) -> Result<bool> {
    for x in presets()? {
        for el in x.group().elements() {
            let gh = ghost(&char_series(&x, el, 6, ctx.bound)?);
            for n in 1..=6 {
                if gh[n - 1] != x.action(&el.pow(n))?.to_matrix().trace() {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn frobenius_on_characters(ctx: &Ctx) -> Result<bool> {
    for x in presets()? {
        for el in x.group().elements() {
            for n in 1..=6 {
                let long = char_series(&x, el, 6 * n, ctx.bound)?;
                if adams_on_witt(&long, n)?.truncate(6) != char_series(&x, &el.pow(n), 6, ctx.bound)? {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn centrality(ctx: &Ctx) -> Result<bool> {
    for x in presets()? {
        let els = x.group().elements();
        for el in els {
            let base = char_series(&x, el, 4, ctx.bound)?;
            for h in els {
                if char_series(&x, &h.compose(el).compose(&h.inverse()), 4, ctx.bound)? != base {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn cycle_class_average(ctx: &Ctx) -> Result<bool> {
    for x in presets()? {
        for el in x.group().elements() {
            for m in 1..=4 {
                let cyc = Partition::row(m);
                let phi = |mu: &Partition| if *mu == cyc { rat(m as i64, 1) } else { Rational::zero() };
                let lhs: Rational = class_function_trace(x.action(el)?, m, phi, ctx.bound)?.values().sum();
                if lhs != x.action(&el.pow(m))?.to_matrix().trace() {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

// complexes

fn nilpotent_complex() -> Result<ComplexObject> {
    let p2 = GradedObject::even(2);
    ComplexObject::two_term(GradedMap::from_matrix(&p2, &p2, &MatrixQ::from_i64_rows(&[&[0, 1], &[0, 0]]))?)
}

fn sym2_complex(rows: &[&[i64]]) -> Result<GComplex> {
    let x = GObject::preset("perm:sym2")?;
    let d = GradedMap::from_matrix(x.object(), x.object(), &MatrixQ::from_i64_rows(rows))?;
    GComplex::new(BTreeMap::from([(0, x.clone()), (1, x)]), BTreeMap::from([(0, d)]))
}

fn cohomology_examples(_: &Ctx) -> Result<bool> {
    let h = nilpotent_complex()?.cohomology();
    let one = GradedObject::even(1);
    let acyclic = ComplexObject::two_term(GradedMap::identity(&GradedObject::even(2)))?;
    b(h.get(&0) == Some(&one) && h.get(&1) == Some(&one) && acyclic.cohomology().values().all(|x| x.is_zero()))
}

fn complex_classes(_: &Ctx) -> Result<bool> {
    for z in [nilpotent_complex()?, sym2_complex(&[&[1, 1], &[1, 1]])?.complex().clone()] {
        let c = complex_class(&z);
        if c != complex_class(&z.gr_tau()) || c != complex_class(&z.gr_s()) {
            return b(false);
        }
    }
    b(true)
}

fn product_of<F: Fn(usize) -> Result<Series<RDElement>>>(factors: Vec<(i64, F)>) -> Result<Series<RDElement>> {
    let mut out = Series::one(3);
    for (n, f) in factors {
        let s = f(3)?;
        out = out.mul_series(&if n.rem_euclid(2) == 0 { s } else { s.inverse()? });
    }
    Ok(out)
}

fn complex_lambda_terms(ctx: &Ctx) -> Result<bool> {
    for z in [nilpotent_complex()?, sym2_complex(&[&[1, 1], &[1, 1]])?.complex().clone()] {
        let lam = lambda_sigma_complex(&z, 3, ctx.bound)?;
        let terms: Vec<(i64, GradedObject)> = z.terms().map(|(n, x)| (n, x.clone())).collect();
        let prod = product_of(terms.iter().map(|(n, x)| (*n, move |o| lambda_sigma(x, o, ctx.bound))).collect())?;
        if lam != prod || lam != lambda_sigma_complex_direct(&z, 3, ctx.bound)? {
            return b(false);
        }
    }
    b(true)
}

fn complex_lambda_cohomology(ctx: &Ctx) -> Result<bool> {
    for z in [nilpotent_complex()?, sym2_complex(&[&[1, 1], &[1, 1]])?.complex().clone()] {
        let lam = lambda_sigma_complex(&z, 3, ctx.bound)?;
        let h = z.cohomology();
        let prod = product_of(h.iter().map(|(n, x)| (*n, move |o| lambda_sigma(x, o, ctx.bound))).collect())?;
        if lam != prod {
            return b(false);
        }
    }
    b(true)
}

fn shift_inversion(ctx: &Ctx) -> Result<bool> {
    for s in ["{0:1}", "{1:1}", "{0:2}", "{1:2}", "{0:1, 1:1}"] {
        let x = g(s);
        let lam = lambda_of_class(&k0_class(&x), 6);
        let inv = alt_series(&x, 6, ctx.bound)?.inverse()?;
        let shifted = ComplexObject::concentrated(x.clone(), 0).shift(1);
        let direct = lambda_sigma_complex_direct(&shifted, 6, ctx.bound)?;
        let alt_shifted = Series::new((0..=6).map(|n| direct.coeff(n).coeff(&Partition::column(n))).collect(), 6);
        let sym = alternate(&sym_series(&x, 6, ctx.bound)?);
        if alt_shifted != inv || witt_neg(&lam).series() != &inv || sym != inv {
            return b(false);
        }
    }
    b(true)
}

fn euler_characteristic(_: &Ctx) -> Result<bool> {
    let x = GObject::preset("perm:sym2")?;
    let line = GObject::trivial(GradedObject::even(1), x.group().clone());
    let sign = GObject::preset("sign:sym2")?;
    let zero = GradedMap::zero(line.object(), sign.object());
    let w = GComplex::new(BTreeMap::from([(0, line), (1, sign)]), BTreeMap::from([(0, zero)]))?;
    let want = RDElement::basis(p("2"), l("1")) - RDElement::basis(p("1,1"), l("1"));
    let avg = sym2_complex(&[&[1, 1], &[1, 1]])?;
    let acyclic = sym2_complex(&[&[1, 0], &[0, 1]])?;
    let mut ok = euler_xi(&w)? == want && euler_xi(&acyclic)?.is_zero();
    for z in [&w, &avg] {
        ok &= euler_xi(z)?.underlying_class() == complex_class(&z.complex().gr_tau());
    }
    b(ok)
}

// repring

fn ev_examples(_: &Ctx) -> Result<bool> {
    let s11 = SymFunc::schur(p("1,1"));
    b(ev(&l("1 + q^2"), &s11)? == l("q^2")
        && ev(&l("1 - q"), &s11)? == l("q^2 - q")
        && samples().iter().all(|x| ev(x, &SymFunc::schur(p("1"))).ok().as_ref() == Some(x)))
}

fn ev_oracle(ctx: &Ctx) -> Result<bool> {
    for a in 0..=2usize {
        for c in 0..=2 - a {
            for d in 0..=2 - a - c {
                let x = GradedObject::new([(0, a), (1, c), (2, d)]);
                for pi in partitions_up_to(3) {
                    if ev(&k0_class(&x), &SymFunc::schur(pi.clone()))? != k0_class(&schur_object(&x, &pi, ctx.bound)?) {
                        return b(false);
                    }
                }
            }
        }
    }
    b(true)
}

fn ev_ring_map(_: &Ctx) -> Result<bool> {
    let ps = partitions_up_to(4);
    for x in samples() {
        for a in &ps {
            for c in ps.iter().filter(|c| a.size() + c.size() <= 4) {
                let (fa, fc) = (SymFunc::schur(a.clone()), SymFunc::schur(c.clone()));
                if ev(&x, &mul(&fa, &fc))? != ev(&x, &fa)? * ev(&x, &fc)? {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn ev_negation(_: &Ctx) -> Result<bool> {
    b(samples().iter().all(|x| {
        partitions_up_to(4).iter().all(|pi| {
            let sign = if pi.size() % 2 == 0 { K0Class::one() } else { -K0Class::one() };
            schur_class(&-x.clone(), pi) == sign * schur_class(x, &pi.conjugate())
        })
    }))
}

fn ev_addition(_: &Ctx) -> Result<bool> {
    for x in samples() {
        for y in samples() {
            for pi in partitions_up_to(3) {
                let mut rhs = K0Class::zero();
                for mu in partitions_up_to(pi.size()) {
                    for eta in partitions_of(pi.size() - mu.size()) {
                        rhs = rhs + K0Class::constant(lr(&mu, &eta, &pi)) * schur_class(&x, &mu) * schur_class(&y, &eta);
                    }
                }
                if schur_class(&(x.clone() + y.clone()), &pi) != rhs {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn random_rd(rng: &mut ChaCha8Rng, grade: usize) -> RDElement {
    let ps = partitions_of(grade);
    let mut out = RDElement::zero();
    for _ in 0..2 {
        let pi = ps[rng.gen_range(0..ps.len())].clone();
        out.add_term(pi, LaurentZ::monomial(rng.gen_range(-2..=2), rng.gen_range(-1..=1)));
    }
    out
}

fn induction_ring(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..10 {
        let (ga, gb) = (rng.gen_range(0..=3), rng.gen_range(0..=2));
        let gc = rng.gen_range(0..=5 - ga - gb);
        let (a, c, d) = (random_rd(&mut rng, ga), random_rd(&mut rng, gb), random_rd(&mut rng, gc));
        let ok = induction_product(&a, &c) == induction_product(&c, &a)
            && induction_product(&induction_product(&a, &c), &d) == induction_product(&a, &induction_product(&c, &d))
            && induction_product(&a, &RDElement::one()) == a;
        if !ok {
            return b(false);
        }
    }
    let one = RDElement::basis(p("1"), l("1"));
    b(induction_product(&one, &one) == RDElement::basis(p("2"), l("1")) + RDElement::basis(p("1,1"), l("1")))
}

fn h_g_inverse(_: &Ctx) -> Result<bool> {
    for n in 0..=3 {
        for pi in partitions_of(n) {
            for u in ["1", "-q", "2 - q^2", "q^-1 + 3*q"] {
                let a = RDElement::basis(pi.clone(), l(u));
                if h_map(&a)?.g_map()? != a {
                    return b(false);
                }
            }
        }
    }
    b(true)
}

fn g_examples(_: &Ctx) -> Result<bool> {
    let swap = GObject::preset("perm:sym2")?;
    let triv = GObject::trivial(GradedObject::even(1), Arc::new(FiniteGroup::symmetric(2)));
    b(g_map(&swap)? == RDElement::basis(p("2"), l("1")) + RDElement::basis(p("1,1"), l("1"))
        && g_map(&triv)? == RDElement::basis(p("2"), l("1")))
}

fn mu_examples(ctx: &Ctx) -> Result<bool> {
    let x = g("{0:1, 1:1}");
    let m = mu_series(&x, 3, ctx.bound)?;
    let totals = (0..=3).all(|n| m.coeff(n).underlying_class() == k0_class(&x).pow(n as u32));
    let plane = GradedObject::even(2);
    let mp = mu_series(&plane, 2, ctx.bound)?;
    let factor = Series::new(vec![RDElement::one(), -RDElement::basis(p("1"), k0_class(&plane))], 2);
    let prod = mp.mul_series(&factor);
    b(totals && prod.coeff(1).is_zero() && !prod.coeff(2).is_zero())
}

fn aw_examples(ctx: &Ctx) -> Result<bool> {
    b((1..=3).all(|n| aw_check(&GradedObject::even(2), n, ctx.bound).unwrap_or(false)))
}

fn lambda_sigma_products(ctx: &Ctx) -> Result<bool> {
    let objs: Vec<GradedObject> = ["{0:1}", "{1:1}", "{0:2}", "{1:2}"].iter().map(|s| g(s)).collect();
    for x in &objs {
        for y in &objs {
            let lhs = lambda_sigma(&x.direct_sum(y), 4, ctx.bound)?;
            if lhs != lambda_sigma(x, 4, ctx.bound)?.mul_series(&lambda_sigma(y, 4, ctx.bound)?) {
                return b(false);
            }
        }
    }
    let line = lambda_sigma(&GradedObject::unit(), 4, ctx.bound)?;
    b((0..=4).all(|n| line.coeff(n) == RDElement::basis(Partition::row(n), l("1"))))
}

fn class_invariants(ctx: &Ctx) -> Result<bool> {
    let mut rng = ctx.rng();
    for _ in 0..10 {
        let (x, y) = (random_object(&mut rng, 3), random_object(&mut rng, 3));
        let ok = k0_class(&x.direct_sum(&y)) == k0_class(&x) + k0_class(&y)
            && k0_class(&x.tensor(&y)) == k0_class(&x) * k0_class(&y)
            && k0_class(&x.shift(1)) == -LaurentZ::q() * k0_class(&x);
        if !ok {
            return b(false);
        }
    }
    for s in ["{0:2}", "{1:1}", "{0:1, 1:1}"] {
        let x = g(s);
        if lambda_of_class(&k0_class(&x), 4).series() != &alt_series(&x, 4, ctx.bound)? {
            return b(false);
        }
    }
    b(true)
}

macro_rules! check {
    ($suite:literal, $name:literal, $identity:literal, [$($cov:literal),*], $f:path) => {
        Check { suite: $suite, name: $name, identity: $identity, covers: &[$($cov),*], run: $f }
    };
}

static CHECKS: &[Check] = &[
    check!("partitions", "count", "#partitions of n follows the pentagonal recurrence, n ≤ 12",
        ["partition.partitions_of"], partition_counts),
    check!("partitions", "conjugate", "conjugation is a size-preserving involution, n ≤ 10",
        ["partition.conjugate"], conjugation),
    check!("partitions", "row-column-dims", "d_(n)(m) = C(m+n-1, n) and d_(1^n)(m) = C(m, n)",
        ["partition.dim_poly_eval"], row_column_dims),
    check!("partitions", "dimension-count", "Σ_π d_π(m) dim V_π = m^n",
        ["partition.dim_poly_eval"], dimension_count),
    check!("characters", "degrees", "Σ_π χ_π(1)² = n!, n ≤ 6", ["symgroup.character_table"], degrees_squared),
    check!("characters", "orthogonality", "row and column orthogonality for Σ5, Σ6",
        ["symgroup.character_table", "symgroup.character"], orthogonality),
    check!("characters", "specht-traces", "Murnaghan-Nakayama values equal Specht module traces, n ≤ 4",
        ["symgroup.character"], specht_traces),
    check!("characters", "idempotent", "isotypic projectors satisfy e² = e, n ≤ 5",
        ["symgroup.isotypic_projector"], projectors_idempotent),
    check!("characters", "orthogonal", "distinct isotypic projectors multiply to 0 and sum to 1, n ≤ 4",
        ["symgroup.isotypic_projector"], projectors_orthogonal),
    check!("characters", "rank-trace", "rank = trace = χ(1)² for projectors on the regular representation",
        ["exact.rank", "symgroup.isotypic_projector"], rank_equals_trace),
    check!("characters", "cycle-type", "cycle type is a conjugation invariant", ["symgroup.cycle_type"], cycle_types),
    check!("symfunc", "newton", "Σ (-1)^k p_k e_(n-k) = -n e_n, n ≤ 8", ["symfunc.newton_check"], newton),
    check!("symfunc", "vanishing", "s_π(a - a) = 0 for 0 < |π| ≤ 4",
        ["symfunc.vanishing_schur_sum", "symfunc.lr"], vanishing),
    check!("symfunc", "lr-commutative", "c^π_(μη) = c^π_(ημ), |μ|+|η| ≤ 6", ["symfunc.lr"], lr_commutative),
    check!("symfunc", "associative", "(s_a s_b) s_c = s_a (s_b s_c) up to degree 6", ["symfunc.mul"], mul_associative),
    check!("symfunc", "omega", "ω(s_π) = s_(π^t) on combinations of degree ≤ 5", ["symfunc.mul"], omega_duality),
    check!("symfunc", "ch-specht", "ch(χ_π) = s_π for characters read off Specht modules, n ≤ 4",
        ["symfunc.ch"], ch_of_specht),
    check!("symfunc", "ch-induction", "ch(Ind(χ_μ × χ_η)) = s_μ s_η, |μ|+|η| ≤ 5",
        ["symfunc.ch", "symfunc.mul"], ch_intertwines_induction),
    check!("symfunc", "powersum", "s_π ↦ p-expansion round-trips, degree ≤ 6",
        ["symfunc.schur_to_powersum"], powersum_transition),
    check!("witt", "ring-axioms", "(Λ(A), ⊞, ∗) is a commutative ring to order 3",
        ["lambda.witt_add", "lambda.witt_mul", "lambda.witt_neg"], witt_ring_axioms),
    check!("witt", "ghosts", "ghost components are additive under ⊞ and multiplicative under ∗",
        ["lambda.ghost", "lambda.witt_mul"], ghost_components),
    check!("witt", "frobenius", "ghost(ψ_n f)_m = ghost(f)_(nm) and ψ_2 ψ_3 = ψ_6",
        ["lambda.adams_on_witt", "lambda.ghost"], frobenius),
    check!("witt", "universal", "P_2 = e1(x)²e2(y) + e2(x)e1(y)² - 2e2(x)e2(y); P_(2,2)(1,1,1,1) = 15",
        ["lambda.universal_product_poly", "lambda.universal_composition_poly"], universal_polys),
    check!("witt", "adams-base", "-t λ'(x)/λ(x) = Σ ψ_n(x)(-t)^n agrees with ψ_n on Λ(A)",
        ["lambda.adams_on_base", "lambda.adams_on_witt"], base_adams),
    check!("witt", "special", "λ^2(xy) and λ^2(λ^2 x) follow the universal polynomials on Z[q, q^-1]",
        ["lambda.special_check"], specialness),
    check!("witt", "negation", "λ(x) λ(-x) = 1", ["repring.lambda_of_class", "exact.series_mul"], lambda_negation),
    check!("witt", "series", "series inverse is two-sided; -t f'/f is additive",
        ["exact.series_mul", "exact.series_inv", "exact.neg_log_derivative"], series_identities),
    check!("schur", "hook-content", "dim S_π(X) = d_π(dim X) for even X, dim ≤ 4, |π| ≤ 4",
        ["tensor.schur_object", "partition.dim_poly_eval"], hook_content),
    check!("schur", "completeness", "Σ_π χ_π(1) dim_d S_π(X) = dim_d X^⊗n, dim X ≤ 3, n ≤ 4",
        ["repring.aw_check", "tensor.schur_object"], isotypic_completeness),
    check!("schur", "cycle-factorization", "tr(σ f^⊗n) = Π_cycles tr(f^|c|)",
        ["tensor.categorical_trace"], cycle_factorization),
    check!("schur", "tensor", "dimensions, classes and traces multiply under ⊗",
        ["tensor.tensor", "tensor.categorical_trace"], tensor_products),
    check!("schur", "sym-action", "(Q²)^⊗2 = 3 V_(2) + V_(1,1); Sym² of an odd line vanishes",
        ["tensor.sym_action", "repring.g_map"], sym_actions),
    check!("schur", "kernel", "ker(Q³ → Q) is the standard representation of Σ3",
        ["tensor.equivariant_kernel"], equivariant_kernels),
    check!("schur", "trace-schur", "tr(g; S_π X) = s_π(eigenvalues of g)", ["tensor.trace_schur"], schur_traces),
    check!("adams", "ghost-traces", "-t χ'/χ = Σ tr(g^n; X)(-t)^n on Σ3 and C4 presets",
        ["tensor.char_series", "lambda.ghost"], ghost_traces),
    check!("adams", "frobenius", "χ_X(g^n) = ψ_n(χ_X(g)) to order 6",
        ["tensor.char_series", "lambda.adams_on_witt"], frobenius_on_characters),
    check!("adams", "central", "χ_X(h g h^-1) = χ_X(g)", ["tensor.char_series"], centrality),
    check!("adams", "cycle-average", "averaging with m·[m-cycles] gives tr(g^m), m ≤ 4",
        ["tensor.categorical_trace"], cycle_class_average),
    check!("complexes", "cohomology", "cohomology of a rank-one differential on Q²; acyclic cone of id",
        ["tensor.cohomology"], cohomology_examples),
    check!("complexes", "classes", "cl(Z) = cl(gr_S Z) = cl(gr_τ Z)",
        ["repring.k0_class", "tensor.gr_s", "tensor.gr_tau"], complex_classes),
    check!("complexes", "lambda-terms", "λ_Σ(Z) = Π λ_Σ(Z^n)^((-1)^n) to t^3",
        ["repring.lambda_sigma"], complex_lambda_terms),
    check!("complexes", "lambda-cohomology", "λ_Σ(Z) = Π λ_Σ(H^n Z)^((-1)^n) to t^3",
        ["repring.lambda_sigma", "tensor.cohomology"], complex_lambda_cohomology),
    check!("complexes", "shift", "λ(X[1]) = λ(X)^-1 = Σ cl(Sym^n X)(-t)^n to t^6",
        ["repring.lambda_of_class", "lambda.witt_neg"], shift_inversion),
    check!("complexes", "euler", "ξ(Z) = Σ (-1)^n g(H^n Z), with the class of gr_τ Z underneath",
        ["repring.euler_xi", "tensor.gr_tau"], euler_characteristic),
    check!("repring", "ev-examples", "ev(1+q², s_(1,1)) = q², ev(1-q, s_(1,1)) = q² - q",
        ["repring.ev"], ev_examples),
    check!("repring", "ev-oracle", "ev(cl X, s_π) = cl S_π(X), dim X ≤ 2 over degrees 0..2",
        ["repring.ev", "tensor.schur_object"], ev_oracle),
    check!("repring", "ev-ring", "ev(x, fg) = ev(x, f) ev(x, g)", ["repring.ev"], ev_ring_map),
    check!("repring", "ev-negation", "S_π(-x) = (-1)^|π| S_(π^t)(x)", ["repring.ev"], ev_negation),
    check!("repring", "ev-addition", "S_π(x+y) = Σ c^π_(μη) S_μ(x) S_η(y)", ["repring.ev"], ev_addition),
    check!("repring", "induction", "the induction product is commutative, associative and unital",
        ["repring.induction_product"], induction_ring),
    check!("repring", "h-g", "g ∘ h = id on [π]⊗u, n ≤ 3", ["repring.h_map", "repring.g_map"], h_g_inverse),
    check!("repring", "g-examples", "g(Q² with swap) = [2] + [1,1]", ["repring.g_map"], g_examples),
    check!("repring", "mu", "μ(cl X) has total classes x^n; μ(cl Q²)(1 - cl(Q²)t) ≠ 1 at t²",
        ["repring.mu_series"], mu_examples),
    check!("repring", "aw", "(Q²)^⊗n = ⊕ V_π ⊗ S_π(Q²), n ≤ 3", ["repring.aw_check"], aw_examples),
    check!("repring", "lambda-sigma", "λ_Σ(X ⊕ Y) = λ_Σ(X) λ_Σ(Y) to t^4",
        ["repring.lambda_sigma", "repring.induction_product"], lambda_sigma_products),
    check!("repring", "classes", "cl is additive, multiplicative, cl(X[1]) = -q cl(X); λ matches Alt",
        ["repring.k0_class", "repring.lambda_of_class"], class_invariants),
];
