//! The parameter space `C^{2g}`: the curve polynomial, its discriminant,
//! the matrix `T`, the fields `L_{2k}` and their commutator matrix.

use num_traits::Zero;

use crate::claim::Claim;
use crate::derivation::{verify_bracket_relation, BracketRelation, Derivation};
use crate::exactpoly::{resultant, Poly, PolyMatrix, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambdaError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("field index {k} is not an even number in 0..={max}")]
    IndexOutOfRange { k: u32, max: u32 },
    #[error("only defined for genus 3, not {0}")]
    GenusNotThree(u32),
}

/// The curve `Y^2 = X^{2g+1} + l4 X^{2g-1} + ... + l_{4g+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveModel {
    pub genus: u32,
}

impl CurveModel {
    pub fn new(genus: u32) -> Result<Self, LambdaError> {
        if genus == 0 {
            return Err(LambdaError::ZeroGenus);
        }
        Ok(CurveModel { genus })
    }

    /// `l4, l6, ..., l_{4g+2}`.
    pub fn lambda_vars(&self) -> Vec<Var> {
        (2..=2 * self.genus + 1).map(|s| lambda_var(2 * s)).collect()
    }

    /// `lambda_s`, or zero when `s` is not one of `4, 6, ..., 4g+2`.
    pub fn lambda(&self, s: i64) -> Poly {
        if s >= 4 && s <= 4 * self.genus as i64 + 2 && s % 2 == 0 {
            Poly::var(lambda_var(s as u32))
        } else {
            Poly::zero()
        }
    }

    pub fn x_var() -> Var {
        Var::named("X").expect("X is a known name")
    }

    pub fn f(&self) -> Poly {
        let g = self.genus;
        let x = Poly::var(Self::x_var());
        let mut f = x.pow(2 * g + 1);
        for s in 2..=2 * g + 1 {
            f = f + self.lambda(2 * s as i64) * x.pow(2 * g + 1 - s);
        }
        f
    }

    /// `Res_X(f, f')`.
    pub fn discriminant(&self) -> Poly {
        let f = self.f();
        resultant(&f, &f.partial(Self::x_var()), Self::x_var()).expect("f and f' are nonzero")
    }

    /// Weight of the discriminant, `4g(2g+1)`.
    pub fn discriminant_weight(&self) -> u32 {
        4 * self.genus * (2 * self.genus + 1)
    }

    /// `T_{2k,2m}` for `1 <= k, m <= 2g`.
    pub fn t_entry(&self, k: u32, m: u32) -> Poly {
        let (k, m) = if k <= m { (k as i64, m as i64) } else { (m as i64, k as i64) };
        let g = self.genus as i64;
        let mut t = self.lambda(2 * k + 2 * m).scale(&int(2 * (k + m)));
        for s in 2..k {
            t = t + (self.lambda(2 * s) * self.lambda(2 * k + 2 * m - 2 * s))
                .scale(&int(2 * (k + m - 2 * s)));
        }
        let c = Rational::new((2 * k * (2 * g - m + 1)).into(), (2 * g + 1).into());
        t - (self.lambda(2 * k) * self.lambda(2 * m)).scale(&c)
    }

    pub fn t_matrix(&self) -> PolyMatrix {
        let n = 2 * self.genus as usize;
        PolyMatrix::from_fn(n, n, |i, j| self.t_entry(i as u32 + 1, j as u32 + 1))
    }

    /// `L_k` for even `k` in `0..=4g-2`: `L_k(l_{2s}) = T_{k+2, 2s-2}`.
    pub fn field(&self, k: u32) -> Result<Derivation, LambdaError> {
        let max = 4 * self.genus - 2;
        if !k.is_multiple_of(2) || k > max {
            return Err(LambdaError::IndexOutOfRange { k, max });
        }
        let row = k / 2 + 1;
        Ok(Derivation::new(
            format!("L{k}"),
            k as i64,
            (2..=2 * self.genus + 1).map(|s| (lambda_var(2 * s), self.t_entry(row, s - 1))),
        ))
    }

    /// `L_0, L_2, ..., L_{4g-2}`.
    pub fn fields(&self) -> Vec<Derivation> {
        (0..2 * self.genus)
            .map(|i| self.field(2 * i).expect("index in range"))
            .collect()
    }
}

pub fn lambda_var(s: u32) -> Var {
    Var::named(&format!("l{s}")).expect("lambda names are well formed")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `det T = c_g R` for the genera where the constant is known.
pub fn expected_det_constant(genus: u32) -> Option<Rational> {
    match genus {
        1 => Some(Rational::new((-4).into(), 3.into())),
        2 => Some(Rational::new(16.into(), 5.into())),
        3 => Some(Rational::new((-64).into(), 7.into())),
        _ => None,
    }
}

/// The ratio `a / b` when it is a constant.
pub fn constant_ratio(a: &Poly, b: &Poly) -> Option<Rational> {
    let (m, cb) = b.leading()?;
    let ca = a.coefficient(m);
    if ca.is_zero() {
        return None;
    }
    let c = ca / cb;
    (a - b.scale(&c)).is_zero().then_some(c)
}

/// Results of checking the four listed properties of the fields `L_{2k}`.
#[derive(Debug, Clone)]
pub struct ParameterSpaceChecks {
    pub claims: Vec<Claim>,
    pub det_t: Poly,
    pub discriminant: Poly,
    pub det_constant: Option<Rational>,
    /// `m_k` with `L_{2k}(det T) = m_k det T`, when divisible.
    pub multipliers: Vec<Option<Poly>>,
}

pub fn expected_multipliers(genus: u32) -> Option<Vec<Poly>> {
    use crate::exactpoly::poly;
    let src: &[&str] = match genus {
        1 => &["12", "0"],
        2 => &["40", "0", "12*l4", "4*l6"],
        3 => &["84", "0", "40*l4", "24*l6", "12*l8", "4*l10"],
        _ => return None,
    };
    Some(src.iter().map(|s| poly(s)).collect())
}

pub fn verify_parameter_fields(model: &CurveModel) -> ParameterSpaceChecks {
    let g = model.genus;
    let fields = model.fields();
    let lam = model.lambda_vars();

    let mut euler = Claim::new(format!("g{g}_euler"), "L0 is the Euler field, [L0, L2k] = 2k L2k");
    for v in &lam {
        let s = v.weight() as i64;
        euler.expect_eq(format!("L0({v})"), &fields[0].on(*v), &Poly::var(*v).scale(&int(s)));
    }
    for l in &fields[1..] {
        let lhs = fields[0].bracket(l);
        let rhs = l.scaled(&Poly::int(l.weight));
        for v in &lam {
            claim_push_eq(&mut euler, &format!("[L0,{}]({v})", l.name), &lhs.on(*v), &rhs.on(*v));
        }
    }

    let mut sym = Claim::new(format!("g{g}_symmetry"), "L2k(l_{2s+4}) = L2s(l_{2k+4})");
    for k in 0..2 * g as i64 {
        for s in 0..k {
            let a = fields[k as usize].apply(&model.lambda(2 * s + 4));
            let b = fields[s as usize].apply(&model.lambda(2 * k + 4));
            sym.expect_eq(format!("k={k},s={s}"), &a, &b);
        }
    }
    if !model.t_matrix().is_symmetric() {
        sym.push("T symmetric", Poly::one());
    }

    let t = model.t_matrix();
    let det_t = t.determinant().expect("T is square");
    let discriminant = model.discriminant();
    let det_constant = constant_ratio(&det_t, &discriminant);
    let mut det = Claim::new("detT_eq_c_R", "det T = c R");
    match (&det_constant, expected_det_constant(g)) {
        (Some(c), Some(e)) => {
            det.expect_eq("det T - c R", &det_t, &discriminant.scale(&e));
            det.detail = Some(format!("c = {c}"));
        }
        (Some(c), None) => det.detail = Some(format!("c = {c}")),
        (None, e) => {
            let e = e.unwrap_or_else(Rational::zero);
            det.expect_eq("det T - c R", &det_t, &discriminant.scale(&e));
            det.detail = Some("det T is not a constant multiple of R".into());
        }
    }
    if !discriminant.is_homogeneous_of(model.discriminant_weight()) {
        det.push("R homogeneous", Poly::one());
    }

    let mut tangent = Claim::new(format!("g{g}_tangency"), "L2k(det T) = m_k det T");
    let expected = expected_multipliers(g);
    let mut multipliers = Vec::new();
    for (i, l) in fields.iter().enumerate() {
        let image = l.apply(&det_t);
        let m = image.div_exact(&det_t);
        match &m {
            Some(m) => {
                if let Some(e) = &expected {
                    tangent.expect_eq(format!("m({})", l.name), m, &e[i]);
                }
            }
            None => tangent.push(format!("{}(det T) mod det T", l.name), image.clone()),
        }
        multipliers.push(m);
    }

    ParameterSpaceChecks {
        claims: vec![euler, sym, det, tangent],
        det_t,
        discriminant,
        det_constant,
        multipliers,
    }
}

fn claim_push_eq(c: &mut Claim, label: &str, a: &Poly, b: &Poly) {
    if a != b {
        c.expect_eq(label, a, b);
    } else {
        c.push(label, Poly::zero());
    }
}

/// Pairs `(i, j)` with `i < j` of nonzero field indices, in row order of the matrix.
pub fn commutator_pairs(genus: u32) -> Vec<(u32, u32)> {
    let n = 2 * genus - 1;
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (2 * i, 2 * j)))
        .collect()
}

/// The `10 x 6` structure matrix of `[L_{2i}, L_{2j}]` in terms of `L_0, ..., L_10` (genus 3).
pub fn commutator_matrix(model: &CurveModel) -> Result<PolyMatrix, LambdaError> {
    use crate::exactpoly::poly;
    if model.genus != 3 {
        return Err(LambdaError::GenusNotThree(model.genus));
    }
    const ROWS: [[&str; 6]; 10] = [
        ["8*l6", "-8*l4", "0", "7", "0", "0"],
        ["6*l8", "0", "-6*l4", "0", "14", "0"],
        ["4*l10", "0", "0", "-4*l4", "0", "21"],
        ["2*l12", "0", "0", "0", "-2*l4", "0"],
        ["-7*l10", "9*l8", "-9*l6", "7*l4", "0", "7"],
        ["-14*l12", "6*l10", "0", "-6*l6", "14*l4", "0"],
        ["-21*l14", "3*l12", "0", "0", "-3*l6", "21*l4"],
        ["-7*l14", "-7*l12", "8*l10", "-8*l8", "7*l6", "7*l4"],
        ["0", "-14*l14", "4*l12", "0", "-4*l8", "14*l6"],
        ["0", "0", "-7*l14", "5*l12", "-5*l10", "7*l8"],
    ];
    let s = Rational::new(2.into(), 7.into());
    Ok(PolyMatrix::from_fn(10, 6, |i, j| poly(ROWS[i][j]).scale(&s)))
}

/// Checks every row `[L_{2i}, L_{2j}] = sum_k M_{row,k} L_{2k}` against `m`.
pub fn verify_commutator_matrix(model: &CurveModel, m: &PolyMatrix) -> Vec<Claim> {
    let fields = model.fields();
    commutator_pairs(model.genus)
        .into_iter()
        .enumerate()
        .map(|(row, (i, j))| {
            let rel = BracketRelation {
                left: &fields[i as usize / 2],
                right: &fields[j as usize / 2],
                expansion: (0..m.cols())
                    .map(|k| (m.get(row, k).clone(), &fields[k]))
                    .collect(),
            };
            verify_bracket_relation(&format!("M_row_{:02}", row + 1), &format!("[L{i},L{j}] = M L"), &rel)
        })
        .collect()
}

/// The structure matrix read off from the fields themselves: the unique
/// polynomial coefficients with `[L_{2i}, L_{2j}] = sum_k c_k L_{2k}`, when
/// they exist, found by solving against `T` via the adjugate.
pub fn bracket_coefficients(model: &CurveModel, left: &Derivation, right: &Derivation) -> Vec<Poly> {
    let fields = model.fields();
    let lam = model.lambda_vars();
    let br = left.bracket(right);
    let w = br.weight;
    // The fields are independent off the discriminant, so the coefficients
    // are determined by a homogeneous linear ansatz in the lambdas.
    let unknowns: Vec<(usize, Vec<crate::exactpoly::Monomial>)> = fields
        .iter()
        .enumerate()
        .map(|(k, f)| (k, monomials_of_weight(&lam, w - f.weight)))
        .collect();
    let mut cols: Vec<(usize, crate::exactpoly::Monomial)> = Vec::new();
    for (k, ms) in &unknowns {
        for m in ms {
            cols.push((*k, m.clone()));
        }
    }
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for v in &lam {
        let target = br.on(*v);
        let mut images: Vec<Poly> = Vec::new();
        for (k, m) in &cols {
            images.push(fields[*k].on(*v).mul_monomial(&int(1), m));
        }
        let mut monos: std::collections::BTreeSet<crate::exactpoly::Monomial> =
            target.terms().map(|(m, _)| m.clone()).collect();
        for im in &images {
            monos.extend(im.terms().map(|(m, _)| m.clone()));
        }
        for mono in monos {
            eqs.push((images.iter().map(|p| p.coefficient(&mono)).collect(), target.coefficient(&mono)));
        }
    }
    let sol = crate::linsolve::solve(&eqs, cols.len()).unwrap_or_default();
    let mut out = vec![Poly::zero(); fields.len()];
    for ((k, m), c) in cols.iter().zip(sol) {
        out[*k] = &out[*k] + Poly::term(c, m.clone());
    }
    out
}

/// All monomials in `vars` of the given weight.
pub fn monomials_of_weight(vars: &[Var], weight: i64) -> Vec<crate::exactpoly::Monomial> {
    use crate::exactpoly::Monomial;
    fn go(vars: &[Var], w: i64, acc: Monomial, out: &mut Vec<Monomial>) {
        if w == 0 {
            out.push(acc);
            return;
        }
        let Some((&v, rest)) = vars.split_first() else {
            return;
        };
        let vw = v.weight() as i64;
        let mut m = acc;
        let mut left = w;
        loop {
            go(rest, left, m.clone(), out);
            if vw == 0 || left < vw {
                break;
            }
            left -= vw;
            m = m.mul(&Monomial::var(v));
        }
    }
    let mut out = Vec::new();
    if weight >= 0 {
        go(vars, weight, Monomial::one(), &mut out);
    }
    out
}
