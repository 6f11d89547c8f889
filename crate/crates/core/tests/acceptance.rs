//! End-to-end acceptance checks, all in exact arithmetic. Each check prints one
//! `PASS`/`FAIL` line; the test fails if any check fails.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};
use schurforge::exact::{rat, BigInt, LaurentZ, MatrixQ, Rational, Series};
use schurforge::lambda::{adams_on_witt, ghost, special_check, witt_neg, LambdaRing};
use schurforge::partition::{dim_poly_eval, partitions_of, partitions_up_to, Partition};
use schurforge::repring::{
    alt_series, aw_check, complex_class, euler_xi, ev, g_map, h_map, k0_class, lambda_of_class, lambda_sigma,
    lambda_sigma_complex, lambda_sigma_complex_direct, schur_class, sym_series, K0Class, RDElement,
};
use schurforge::symfunc::{ch, lr, mul, newton_check, vanishing_schur_sum, SymFunc};
use schurforge::symgroup::{character, character_table, isotypic_projector, Permutation, SpechtModule};
use schurforge::tensor::{
    char_series, schur_object, ComplexObject, GComplex, GObject, GradedMap, GradedObject, DEFAULT_TENSOR_BOUND as B,
};

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g(s: &str) -> GradedObject {
    s.parse().unwrap()
}

fn l(s: &str) -> K0Class {
    s.parse().unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn hook_content(pi: &Partition, m: i64) -> Rational {
    let mut out = Rational::one();
    for (i, row) in pi.parts().iter().enumerate() {
        for j in 0..*row {
            let arm = row - j - 1;
            let leg = pi.parts().iter().skip(i + 1).filter(|&&r| r > j).count();
            out *= rat(m + j as i64 - i as i64, (arm + leg + 1) as i64);
        }
    }
    out
}

fn schur_dimensions() -> Check {
    for pi in partitions_up_to(4) {
        for d in 0..=3usize {
            let brute = schur_object(&GradedObject::even(d), &pi, B).map_err(|e| e.to_string())?.total_dim();
            let expected = hook_content(&pi, d as i64);
            ensure!(Rational::from_integer(brute.into()) == expected, "S_{pi} on dim {d}: {brute} vs {expected}");
            ensure!(dim_poly_eval(&pi, d as i64) == BigInt::from(brute), "dim_poly_eval {pi} {d}");
        }
    }
    Ok(())
}

fn mixed_parity_objects() -> Vec<GradedObject> {
    ["{0:1}", "{1:1}", "{0:2}", "{1:2}", "{0:1, 1:1}"].iter().map(|s| g(s)).collect()
}

fn lambda_sigma_multiplicative() -> Check {
    let objs = mixed_parity_objects();
    for (i, x) in objs.iter().enumerate() {
        for y in &objs[i..] {
            let lhs = lambda_sigma(&x.direct_sum(y), 4, B).map_err(|e| e.to_string())?;
            let rhs = lambda_sigma(x, 4, B).unwrap().mul_series(&lambda_sigma(y, 4, B).unwrap());
            ensure!(lhs == rhs, "λ_Σ({x} ⊕ {y})");
        }
    }
    Ok(())
}

fn newton_and_vanishing_sums() -> Check {
    for n in 1..=8 {
        ensure!(newton_check(n), "Newton identity n = {n}");
        // n e_n = Σ_{i=1}^n (−1)^{i−1} e_{n−i} p_i, assembled here from products
        let mut rhs = SymFunc::zero();
        for i in 1..=n {
            let t = mul(&SymFunc::elementary(n - i), &SymFunc::power_sum(&Partition::row(i)));
            rhs = if i % 2 == 1 { rhs + t } else { rhs - t };
        }
        ensure!(rhs == SymFunc::elementary(n).scale(&rat(n as i64, 1)), "n e_n, n = {n}");
    }
    for pi in partitions_up_to(4).into_iter().filter(|q| !q.is_empty()) {
        ensure!(vanishing_schur_sum(&pi).is_zero(), "S_{pi}(a − a) ≠ 0");
    }
    Ok(())
}

fn matrix_trace_of_power(x: &GObject, h: &Permutation) -> Rational {
    let m = x.action(h).unwrap().to_matrix();
    m.trace()
}

fn adams_characteristic() -> Check {
    let reps = ["perm:sym3", "signperm:sym3", "reg:cyc4"];
    for name in reps {
        let x = GObject::preset(name).map_err(|e| e.to_string())?;
        for el in x.group().elements() {
            let f = char_series(&x, el, 6, B).map_err(|e| e.to_string())?;
            let gh = ghost(&f);
            for n in 1..=6 {
                let gn = el.pow(n);
                ensure!(gh[n - 1] == matrix_trace_of_power(&x, &gn), "{name}: ghost_{n} at {el}");
                let long = char_series(&x, el, 6 * n, B).map_err(|e| e.to_string())?;
                let lhs = adams_on_witt(&long, n).map_err(|e| e.to_string())?.truncate(6);
                let rhs = char_series(&x, &gn, 6, B).map_err(|e| e.to_string())?;
                ensure!(lhs == rhs, "{name}: ψ_{n} at {el}");
            }
        }
    }
    Ok(())
}

fn alt_column(s: &Series<RDElement>) -> Series<K0Class> {
    Series::new((0..=s.order()).map(|n| s.coeff(n).coeff(&Partition::column(n))).collect(), s.order())
}

fn shift_inversion() -> Check {
    let objs = ["{0:1}", "{1:1}", "{0:2}", "{1:2}", "{2:1}", "{0:1, 1:1}"];
    for s in objs {
        let x = g(s);
        let lam = lambda_of_class(&k0_class(&x), 6);
        let alt = alt_series(&x, 6, B).map_err(|e| e.to_string())?;
        ensure!(lam.series() == &alt, "λ({s}) vs brute Alt");
        let inv = alt.inverse().map_err(|e| e.to_string())?;
        let shifted = ComplexObject::concentrated(x.clone(), 0).shift(1);
        let alt_shifted = alt_column(&lambda_sigma_complex_direct(&shifted, 6, B).map_err(|e| e.to_string())?);
        ensure!(alt_shifted == inv, "λ({s}[1]) vs λ({s})⁻¹");
        ensure!(witt_neg(&lam).series() == &inv, "witt_neg λ({s})");
        let sym = sym_series(&x, 6, B).map_err(|e| e.to_string())?;
        let signed = Series::new(
            (0..=6).map(|n| if n % 2 == 0 { sym.coeff(n) } else { -sym.coeff(n) }).collect(),
            6,
        );
        ensure!(signed == inv, "Σ cl(Symⁿ {s})(−t)ⁿ vs λ({s})⁻¹");
    }
    Ok(())
}

fn h_g_inverse() -> Check {
    for n in 0..=3 {
        for pi in partitions_of(n) {
            for u in ["1", "-q", "2 - q^2", "q^-1 + 3*q"] {
                let a = RDElement::basis(pi.clone(), l(u));
                let back = h_map(&a).map_err(|e| e.to_string())?.g_map().map_err(|e| e.to_string())?;
                ensure!(back == a, "g(h({a})) = {back}");
            }
        }
    }
    for n in 1..=3 {
        ensure!(aw_check(&GradedObject::even(2), n, B).map_err(|e| e.to_string())?, "aw ℚ², n = {n}");
    }
    let sq = schurforge::tensor::sym_action(&GradedObject::even(2), 2, B).map_err(|e| e.to_string())?;
    let expected = RDElement::basis(p("2"), l("3")) + RDElement::basis(p("1,1"), l("1"));
    ensure!(g_map(&sq).map_err(|e| e.to_string())? == expected, "g((ℚ²)^⊗2)");
    Ok(())
}

fn specialness() -> Check {
    let samples: Vec<K0Class> = ["q", "1 + q^2", "1 - q", "2*q - q^-1"].iter().map(|s| l(s)).collect();
    for x in &samples {
        for y in &samples {
            ensure!(special_check(x, y, 2, 1).map_err(|e| e.to_string())?, "P₂ at {x}, {y}");
            ensure!(special_check(x, y, 2, 2).map_err(|e| e.to_string())?, "P₂,₂ at {x}, {y}");
            // λ²(xy) = λ¹(x)²λ²(y) + λ²(x)λ¹(y)² − 2λ²(x)λ²(y)
            let (x1, x2, y1, y2) = (x.lambda_op(1), x.lambda_op(2), y.lambda_op(1), y.lambda_op(2));
            let p2 = x1.clone() * x1 * y2.clone() + x2.clone() * y1.clone() * y1 - K0Class::constant(2) * x2 * y2;
            ensure!((x.clone() * y.clone()).lambda_op(2) == p2, "explicit P₂ at {x}, {y}");
        }
        // λ²(λ²x) = λ¹(x)λ³(x) − λ⁴(x)
        let lhs = x.lambda_op(2).lambda_op(2);
        ensure!(lhs == x.lambda_op(1) * x.lambda_op(3) - x.lambda_op(4), "explicit P₂,₂ at {x}");
    }
    Ok(())
}

fn sym2_complex(d: &[&[i64]]) -> GComplex {
    let x = GObject::preset("perm:sym2").unwrap();
    let dm = GradedMap::from_matrix(x.object(), x.object(), &MatrixQ::from_i64_rows(d)).unwrap();
    GComplex::new(BTreeMap::from([(0, x.clone()), (1, x)]), BTreeMap::from([(0, dm)])).unwrap()
}

fn complex_formulas() -> Check {
    let p2 = GradedObject::even(2);
    let nilpotent = GradedMap::from_matrix(&p2, &p2, &MatrixQ::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
    let averaging = sym2_complex(&[&[1, 1], &[1, 1]]);
    let zs = [ComplexObject::two_term(nilpotent).map_err(|e| e.to_string())?, averaging.complex().clone()];
    for z in &zs {
        let lam = lambda_sigma_complex(z, 3, B).map_err(|e| e.to_string())?;
        ensure!(lam == lambda_sigma_complex_direct(z, 3, B).unwrap(), "gr_S vs direct");
        let mut by_terms = Series::one(3);
        for (n, x) in z.terms() {
            let f = lambda_sigma(x, 3, B).unwrap();
            by_terms = by_terms.mul_series(&if n % 2 == 0 { f } else { f.inverse().unwrap() });
        }
        ensure!(lam == by_terms, "product over terms");
        let mut by_coh = Series::one(3);
        for (n, h) in z.cohomology() {
            let f = lambda_sigma(&h, 3, B).unwrap();
            by_coh = by_coh.mul_series(&if n % 2 == 0 { f } else { f.inverse().unwrap() });
        }
        ensure!(lam == by_coh, "product over cohomology");
    }
    let x = GObject::preset("perm:sym2").unwrap();
    let line = GObject::trivial(GradedObject::even(1), x.group().clone());
    let sum = GradedMap::from_matrix(x.object(), line.object(), &MatrixQ::from_i64_rows(&[&[1, 1]])).unwrap();
    let onto = GComplex::new(BTreeMap::from([(0, x), (1, line)]), BTreeMap::from([(0, sum)])).unwrap();
    for z in [&averaging, &onto] {
        let xi = euler_xi(z).map_err(|e| e.to_string())?;
        ensure!(xi.underlying_class() == complex_class(&z.complex().gr_tau()), "ξ vs gr_τ class");
        ensure!(xi.underlying_class() == complex_class(z.complex()), "ξ vs class of Z");
        let mut termwise = RDElement::zero();
        for (n, t) in z.terms() {
            let c = g_map(t).unwrap();
            termwise = if n % 2 == 0 { termwise + c } else { termwise - c };
        }
        ensure!(xi == termwise, "ξ vs termwise g");
    }
    ensure!(euler_xi(&onto).unwrap() == RDElement::basis(p("1,1"), l("1")), "ξ of the sum map");
    Ok(())
}

fn small_objects() -> Vec<GradedObject> {
    let mut out = Vec::new();
    for a in 0..=2usize {
        for b in 0..=2 - a {
            for c in 0..=2 - a - b {
                if a + b + c > 0 {
                    out.push(GradedObject::new([(0, a), (1, b), (2, c)]));
                }
            }
        }
    }
    out
}

fn ev_oracle() -> Check {
    for x in small_objects() {
        for pi in partitions_up_to(3) {
            let lhs = ev(&k0_class(&x), &SymFunc::schur(pi.clone())).map_err(|e| e.to_string())?;
            let rhs = k0_class(&schur_object(&x, &pi, B).map_err(|e| e.to_string())?);
            ensure!(lhs == rhs, "ev at {x}, s_{pi}: {lhs} vs {rhs}");
        }
    }
    let samples: Vec<K0Class> = ["1", "2", "q", "1 - q", "1 + q^2"].iter().map(|s| l(s)).collect();
    let parts = partitions_up_to(4);
    for x in &samples {
        for a in &parts {
            for b in parts.iter().filter(|b| a.size() + b.size() <= 4) {
                let (fa, fb) = (SymFunc::schur(a.clone()), SymFunc::schur(b.clone()));
                let lhs = ev(x, &mul(&fa, &fb)).unwrap();
                ensure!(lhs == ev(x, &fa).unwrap() * ev(x, &fb).unwrap(), "ev({x}) on s_{a} s_{b}");
            }
            let sign = if a.size() % 2 == 0 { K0Class::one() } else { -K0Class::one() };
            ensure!(schur_class(&-x.clone(), a) == sign * schur_class(x, &a.conjugate()), "negation rule {x} {a}");
        }
        for y in &samples {
            for pi in &parts {
                let mut rhs = K0Class::zero();
                for mu in partitions_up_to(pi.size()) {
                    for eta in partitions_of(pi.size() - mu.size()) {
                        let c = lr(&mu, &eta, pi);
                        rhs = rhs + K0Class::constant(c) * schur_class(x, &mu) * schur_class(y, &eta);
                    }
                }
                ensure!(schur_class(&(x.clone() + y.clone()), pi) == rhs, "addition rule {x}, {y}, {pi}");
            }
        }
    }
    Ok(())
}

/// `s_π(x₁, …, x_k)` as a sum over semistandard tableaux with entries `< k`.
fn ssyt_eval(pi: &Partition, xs: &[Rational]) -> Rational {
    let cells: Vec<(usize, usize)> = pi.cells().collect();
    let k = xs.len();
    let mut total = Rational::zero();
    let mut fill = vec![0usize; cells.len()];
    loop {
        let at = |i: usize, j: usize| fill[cells.iter().position(|&c| c == (i, j)).unwrap()];
        let ok = cells.iter().all(|&(i, j)| {
            (j == 0 || at(i, j - 1) <= at(i, j)) && (i == 0 || at(i - 1, j) < at(i, j))
        });
        if ok {
            total += fill.iter().fold(Rational::one(), |acc, &e| acc * &xs[e]);
        }
        let mut pos = 0;
        loop {
            if pos == fill.len() {
                return total;
            }
            fill[pos] += 1;
            if fill[pos] < k {
                break;
            }
            fill[pos] = 0;
            pos += 1;
        }
    }
}

fn powersum_eval(f: &SymFunc, xs: &[Rational]) -> Rational {
    let mut out = Rational::zero();
    for (mu, c) in f.to_powersum() {
        let mut term = c.clone();
        for &r in mu.parts() {
            term *= xs.iter().fold(Rational::zero(), |acc, x| acc + num_traits::pow(x.clone(), r));
        }
        out += term;
    }
    out
}

fn cycle_representative(mu: &Partition) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 0;
    for &r in mu.parts() {
        cycles.push((next + 1..=next + r).collect::<Vec<_>>());
        next += r;
    }
    Permutation::from_cycles(&cycles, mu.size()).unwrap()
}

fn character_infrastructure() -> Check {
    for n in [5usize, 6] {
        let t = character_table(n).map_err(|e| e.to_string())?;
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let parts = t.partitions().to_vec();
        let sizes = t.class_sizes();
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate() {
                let row: BigInt = (0..parts.len())
                    .map(|k| &sizes[k] * BigInt::from(t.row(i)[k]) * BigInt::from(t.row(j)[k]))
                    .sum();
                ensure!(row == if i == j { fact.clone() } else { BigInt::zero() }, "row orthogonality {a} {b}");
                let col: BigInt = (0..parts.len()).map(|k| BigInt::from(t.row(k)[i] * t.row(k)[j])).sum();
                ensure!(col == if i == j { a.z() } else { BigInt::zero() }, "column orthogonality {a} {b}");
            }
        }
        let sq: BigInt = parts.iter().map(|q| BigInt::from(t.degree(q)).pow(2)).sum();
        ensure!(sq == fact, "Σ χ(1)² for n = {n}");
    }
    let xs: Vec<Rational> = [1, 2, 3, 5].iter().map(|&v| rat(v, 1)).collect();
    for n in 1..=4 {
        for pi in partitions_of(n) {
            let v = SpechtModule::new(&pi);
            let mut values = BTreeMap::new();
            for mu in partitions_of(n) {
                let brute = v.trace(&cycle_representative(&mu));
                ensure!(Rational::from_integer(character(&pi, &mu).unwrap().into()) == brute, "χ_{pi}({mu})");
                values.insert(mu, brute);
            }
            let proj = isotypic_projector(&pi).map_err(|e| e.to_string())?;
            let d = v.dim();
            ensure!(proj.left_regular_matrix().rank() == d * d, "isotypic rank {pi}");
            let f = ch(n, &values).map_err(|e| e.to_string())?;
            ensure!(f == SymFunc::schur(pi.clone()), "ch(χ_{pi})");
            ensure!(powersum_eval(&f, &xs) == ssyt_eval(&pi, &xs), "ch(χ_{pi}) at (1,2,3,5)");
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let checks: [(&str, fn() -> Check); 10] = [
        ("Schur functor dimensions match the hook-content formula", schur_dimensions),
        ("λ_Σ is multiplicative on direct sums", lambda_sigma_multiplicative),
        ("Newton identities and vanishing Schur sums", newton_and_vanishing_sums),
        ("characteristic series: ghosts and Frobenius", adams_characteristic),
        ("shift inverts λ; signed Sym series", shift_inversion),
        ("g ∘ h = id and the isotypic decomposition", h_g_inverse),
        ("specialness of ℤ[q, q⁻¹]", specialness),
        ("λ_Σ of complexes and the Euler map ξ", complex_formulas),
        ("ev agrees with Schur functors and is a ring map", ev_oracle),
        ("character tables, Specht traces and ch", character_infrastructure),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in checks.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let ms = start.elapsed().as_millis();
        match r {
            Ok(()) => println!("[{:>2}] PASS  {name}  ({ms} ms)", i + 1),
            Err(e) => {
                println!("[{:>2}] FAIL  {name}  ({ms} ms): {e}", i + 1);
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}

#[test]
fn laurent_convention_sanity() {
    assert_eq!(k0_class(&GradedObject::line(3)), LaurentZ::monomial(-1, 3));
}
