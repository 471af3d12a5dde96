//! GNAT-style dimensionality checking.
//!
//! Physical quantities are declared as subtypes annotated with rational
//! exponents over seven base dimensions. Expressions over such subtypes are
//! checked statically: `*` and `/` combine exponents, `+`/`-`/comparisons
//! require equal vectors, assignments/arguments/returns must match the
//! target subtype exactly.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::loc::Loc;
use crate::sem::{
    AttrPrefix, BinOp, ExprKind, ObjectKind, Program, Stmt, SubId, Target, UnOp,
};

/// Number of base dimensions.
pub const NDIMS: usize = 7;

/// Base dimension names, in storage order.
pub const DIM_NAMES: [&str; NDIMS] = [
    "length",
    "mass",
    "time",
    "temperature",
    "current",
    "angle",
    "aux",
];

/// Rational exponents over the seven base dimensions.
///
/// `BigRational` keeps every component in lowest terms, so the all-zero
/// vector is the unique dimensionless value and equality is component-wise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DimVector {
    exponents: [BigRational; NDIMS],
}

impl Default for DimVector {
    fn default() -> Self {
        Self::dimensionless()
    }
}

impl DimVector {
    pub fn dimensionless() -> Self {
        DimVector { exponents: Default::default() }
    }

    /// A unit vector: exponent 1 on the named base dimension.
    pub fn base(name: &str) -> Option<Self> {
        let idx = DIM_NAMES.iter().position(|d| *d == name)?;
        let mut v = Self::dimensionless();
        v.exponents[idx] = BigRational::one();
        Some(v)
    }

    pub fn from_exponents(exps: [BigRational; NDIMS]) -> Self {
        DimVector { exponents: exps }
    }

    /// Build from `(name, exponent)` items; unnamed dimensions stay zero.
    pub fn from_items<'a>(
        items: impl IntoIterator<Item = (&'a str, BigRational)>,
    ) -> Option<Self> {
        let mut v = Self::dimensionless();
        for (name, exp) in items {
            let idx = DIM_NAMES.iter().position(|d| *d == name)?;
            v.exponents[idx] = exp;
        }
        Some(v)
    }

    pub fn exponent(&self, idx: usize) -> &BigRational {
        &self.exponents[idx]
    }

    pub fn is_dimensionless(&self) -> bool {
        self.exponents.iter().all(|e| e.is_zero())
    }
}

/// Dimension of a product: component-wise sum of exponents.
pub fn dim_mul(a: &DimVector, b: &DimVector) -> DimVector {
    let mut out = a.clone();
    for (o, e) in out.exponents.iter_mut().zip(&b.exponents) {
        *o += e;
    }
    out
}

/// Dimension of a quotient: component-wise difference.
pub fn dim_div(a: &DimVector, b: &DimVector) -> DimVector {
    let mut out = a.clone();
    for (o, e) in out.exponents.iter_mut().zip(&b.exponents) {
        *o -= e;
    }
    out
}

/// Dimension of a power: component-wise multiplication by the exponent.
pub fn dim_pow(a: &DimVector, k: &BigRational) -> DimVector {
    let mut out = a.clone();
    for o in out.exponents.iter_mut() {
        *o *= k;
    }
    out
}

impl fmt::Display for DimVector {
    /// Nonzero exponents rendered like `angle.time**(-1)`: positive
    /// exponents first, then negative ones, each group in base order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return write!(f, "dimensionless");
        }
        let mut parts = Vec::new();
        for negative in [false, true] {
            for (i, e) in self.exponents.iter().enumerate() {
                if e.is_zero() || e.is_negative() != negative {
                    continue;
                }
                if e.is_one() {
                    parts.push(DIM_NAMES[i].to_string());
                } else if e.is_integer() {
                    if e.is_negative() {
                        parts.push(format!("{}**({})", DIM_NAMES[i], e));
                    } else {
                        parts.push(format!("{}**{}", DIM_NAMES[i], e));
                    }
                } else {
                    parts.push(format!("{}**({})", DIM_NAMES[i], e));
                }
            }
        }
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Context in which a dimension mismatch was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimContext {
    Assignment,
    Operator,
    Argument,
    Return,
}

/// One dimensional inconsistency; `expected != actual` always holds.
#[derive(Clone, Debug, PartialEq)]
pub struct DimDiagnostic {
    pub loc: Loc,
    pub expected: DimVector,
    pub actual: DimVector,
    pub context: DimContext,
}

impl fmt::Display for DimDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: dimension mismatch: expected {}, got {}",
            self.loc, self.expected, self.actual
        )
    }
}

/// Check a resolved program for dimensional consistency.
///
/// Literals are dimensionless, unit constants carry their declared
/// dimension, and checking continues past mismatches so one run reports
/// every inconsistency. Output is sorted by location.
pub fn check_dims(prog: &Program) -> Vec<DimDiagnostic> {
    let mut diags = Vec::new();
    for (idx, obj) in prog.objects.iter().enumerate() {
        if let ObjectKind::Global { init: Some(init), .. } = &obj.kind {
            let d = dim_of_expr(init, prog, None, &mut diags);
            let want = prog.ty(obj.ty).dim.clone();
            mismatch(
                &mut diags,
                init.loc.clone(),
                want,
                d,
                DimContext::Assignment,
            );
            let _ = idx;
        }
    }
    for (i, sub) in prog.subs.iter().enumerate() {
        let sub_id = SubId(i as u32);
        if sub.builtin {
            continue;
        }
        if let Some(pre) = &sub.pre {
            dim_of_expr(pre, prog, Some(sub_id), &mut diags);
        }
        if let Some(post) = &sub.post {
            dim_of_expr(post, prog, Some(sub_id), &mut diags);
        }
        for &obj_id in &sub.locals {
            let obj = prog.obj(obj_id);
            if let ObjectKind::Local { init: Some(init), .. } = &obj.kind {
                let d = dim_of_expr(init, prog, Some(sub_id), &mut diags);
                mismatch(
                    &mut diags,
                    init.loc.clone(),
                    prog.ty(obj.ty).dim.clone(),
                    d,
                    DimContext::Assignment,
                );
            }
        }
        if let Some(body) = &sub.body {
            check_stmts(body, prog, sub_id, &mut diags);
        }
    }
    diags.sort_by(|a, b| a.loc.cmp(&b.loc));
    diags
}

fn check_stmts(stmts: &[Stmt], prog: &Program, sub: SubId, diags: &mut Vec<DimDiagnostic>) {
    for stmt in stmts {
        match stmt {
            Stmt::Assign { target, value, loc } => {
                let actual = dim_of_expr(value, prog, Some(sub), diags);
                let expected = match target {
                    Target::Var(obj) => prog.ty(prog.obj(*obj).ty).dim.clone(),
                    Target::Index { base, index } => {
                        dim_of_expr(index, prog, Some(sub), diags);
                        elem_dim(prog, prog.obj(*base).ty)
                    }
                    Target::Slice { base, .. } => elem_dim(prog, prog.obj(*base).ty),
                };
                mismatch(diags, loc.clone(), expected, actual, DimContext::Assignment);
            }
            Stmt::If { cond, then_branch, else_branch, .. } => {
                dim_of_expr(cond, prog, Some(sub), diags);
                check_stmts(then_branch, prog, sub, diags);
                check_stmts(else_branch, prog, sub, diags);
            }
            Stmt::While { cond, body, .. } => {
                dim_of_expr(cond, prog, Some(sub), diags);
                check_stmts(body, prog, sub, diags);
            }
            Stmt::Return { value, loc } => {
                if let Some(value) = value {
                    let actual = dim_of_expr(value, prog, Some(sub), diags);
                    let expected = prog.sub(sub).ret.map_or_else(
                        DimVector::dimensionless,
                        |t| prog.ty(t).dim.clone(),
                    );
                    mismatch(diags, loc.clone(), expected, actual, DimContext::Return);
                }
            }
            Stmt::Call { sub: callee, args, .. } => {
                check_call(*callee, args, prog, sub, diags);
            }
            Stmt::Pragma { kind, .. } => {
                if let Some(expr) = kind.expr() {
                    dim_of_expr(expr, prog, Some(sub), diags);
                }
            }
        }
    }
}

fn elem_dim(prog: &Program, array_ty: crate::sem::TypeId) -> DimVector {
    match prog.ty(array_ty).base {
        crate::sem::BaseType::Array { elem, .. } => prog.ty(elem).dim.clone(),
        _ => DimVector::dimensionless(),
    }
}

fn mismatch(
    diags: &mut Vec<DimDiagnostic>,
    loc: Loc,
    expected: DimVector,
    actual: DimVector,
    context: DimContext,
) {
    if expected != actual {
        diags.push(DimDiagnostic { loc, expected, actual, context });
    }
}

fn check_call(
    callee: SubId,
    args: &[crate::sem::Expr],
    prog: &Program,
    sub: SubId,
    diags: &mut Vec<DimDiagnostic>,
) -> DimVector {
    let info = prog.sub(callee);
    if info.builtin && info.name == "sin" {
        // Sin requires an angle and returns a dimensionless value.
        if let Some(arg) = args.first() {
            let actual = dim_of_expr(arg, prog, Some(sub), diags);
            let expected = DimVector::base("angle").unwrap();
            mismatch(diags, arg.loc.clone(), expected, actual, DimContext::Argument);
        }
        return DimVector::dimensionless();
    }
    for (arg, &param) in args.iter().zip(&info.params) {
        let actual = dim_of_expr(arg, prog, Some(sub), diags);
        let expected = prog.ty(prog.obj(param).ty).dim.clone();
        mismatch(diags, arg.loc.clone(), expected, actual, DimContext::Argument);
    }
    info.ret
        .map_or_else(DimVector::dimensionless, |t| prog.ty(t).dim.clone())
}

fn dim_of_expr(
    e: &crate::sem::Expr,
    prog: &Program,
    sub: Option<SubId>,
    diags: &mut Vec<DimDiagnostic>,
) -> DimVector {
    match &e.kind {
        ExprKind::IntLit(_) | ExprKind::FloatLit(_) | ExprKind::BoolLit(_) => {
            DimVector::dimensionless()
        }
        ExprKind::Var(obj) => match &prog.obj(*obj).kind {
            ObjectKind::UnitConst { dim, .. } => dim.clone(),
            _ => prog.ty(prog.obj(*obj).ty).dim.clone(),
        },
        ExprKind::Index { base, index } => {
            dim_of_expr(index, prog, sub, diags);
            elem_dim(prog, prog.obj(*base).ty)
        }
        ExprKind::Slice { .. } => DimVector::dimensionless(),
        ExprKind::Aggregate { elem } => dim_of_expr(elem, prog, sub, diags),
        ExprKind::AttrFirst(p) | ExprKind::AttrLast(p) => match p {
            AttrPrefix::Type(t) => prog.ty(*t).dim.clone(),
            AttrPrefix::Object(o) => prog.ty(prog.obj(*o).ty).dim.clone(),
        },
        ExprKind::AttrLength(_) => DimVector::dimensionless(),
        ExprKind::AttrResult => sub
            .and_then(|s| prog.sub(s).ret)
            .map_or_else(DimVector::dimensionless, |t| prog.ty(t).dim.clone()),
        ExprKind::Call { sub: callee, args } => check_call(*callee, args, prog, sub.unwrap_or(*callee), diags),
        ExprKind::Binary { op, lhs, rhs } => {
            let ld = dim_of_expr(lhs, prog, sub, diags);
            let rd = dim_of_expr(rhs, prog, sub, diags);
            match op {
                BinOp::Mul => dim_mul(&ld, &rd),
                BinOp::Div => dim_div(&ld, &rd),
                BinOp::Add | BinOp::Sub | BinOp::Rem => {
                    mismatch(diags, rhs.loc.clone(), ld.clone(), rd, DimContext::Operator);
                    ld
                }
                BinOp::Eq | BinOp::Ne | BinOp::Lt | BinOp::Le | BinOp::Gt | BinOp::Ge => {
                    mismatch(diags, rhs.loc.clone(), ld, rd, DimContext::Operator);
                    DimVector::dimensionless()
                }
                BinOp::And | BinOp::Or => DimVector::dimensionless(),
            }
        }
        ExprKind::Unary { op, arg } => {
            let d = dim_of_expr(arg, prog, sub, diags);
            match op {
                UnOp::Neg => d,
                UnOp::Not => DimVector::dimensionless(),
            }
        }
    }
}

/// Parse a rational like `1`, `-2` or `1/2` (used by dimension aspects).
pub fn parse_rational(neg: bool, num: &BigInt, den: Option<&BigInt>) -> Option<BigRational> {
    let den = den.cloned().unwrap_or_else(BigInt::one);
    if den.is_zero() {
        return None;
    }
    let mut r = BigRational::new(num.clone(), den);
    if neg {
        r = -r;
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(items: &[(&str, i64)]) -> DimVector {
        DimVector::from_items(
            items
                .iter()
                .map(|&(n, e)| (n, BigRational::from_integer(BigInt::from(e)))),
        )
        .unwrap()
    }

    #[test]
    fn mul_adds_exponents() {
        // angle^1 * time^-1
        let got = dim_mul(&v(&[("angle", 1)]), &v(&[("time", -1)]));
        assert_eq!(got, v(&[("angle", 1), ("time", -1)]));
        // dimensionless is the identity
        let x = v(&[("length", 2), ("mass", -1)]);
        assert_eq!(dim_mul(&DimVector::dimensionless(), &x), x);
        // 100.0 * Milli * Second: dimensionless * time^1
        assert_eq!(dim_mul(&v(&[("time", 1)]), &DimVector::dimensionless()), v(&[("time", 1)]));
    }

    #[test]
    fn div_subtracts_exponents() {
        // time / angle, the swapped-operands bug
        assert_eq!(
            dim_div(&v(&[("time", 1)]), &v(&[("angle", 1)])),
            v(&[("time", 1), ("angle", -1)])
        );
        // self-cancellation
        let x = v(&[("current", 3), ("aux", -2)]);
        assert!(dim_div(&x, &x).is_dimensionless());
        // angle / time = angular velocity
        assert_eq!(
            dim_div(&v(&[("angle", 1)]), &v(&[("time", 1)])),
            v(&[("angle", 1), ("time", -1)])
        );
    }

    #[test]
    fn pow_scales_exponents() {
        let two = BigRational::from_integer(BigInt::from(2));
        let zero = BigRational::from_integer(BigInt::from(0));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(dim_pow(&v(&[("length", 1)]), &two), v(&[("length", 2)]));
        assert!(dim_pow(&v(&[("mass", 5), ("time", -3)]), &zero).is_dimensionless());
        assert_eq!(dim_pow(&v(&[("length", 2)]), &half), v(&[("length", 1)]));
    }

    #[test]
    fn display_orders_positive_then_negative() {
        assert_eq!(v(&[("angle", 1), ("time", -1)]).to_string(), "angle.time**(-1)");
        assert_eq!(v(&[("time", 1), ("angle", -1)]).to_string(), "time.angle**(-1)");
        assert_eq!(DimVector::dimensionless().to_string(), "dimensionless");
        let half = DimVector::from_items([(
            "length",
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )])
        .unwrap();
        assert_eq!(half.to_string(), "length**(1/2)");
    }
}
