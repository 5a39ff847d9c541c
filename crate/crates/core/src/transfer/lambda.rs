//! The homotopy-transfer recursion.
//!
//! For inputs `v_1 .. v_n` the tree sum collapses to a recursion over
//! contiguous splits of the argument list:
//!
//! ```text
//! lambda_2(v1, v2) = v1 v2
//! lambda_n = (-1)^(n-1) [Q lambda_(n-1)(v1..v_(n-1))] v_n
//!          - (-1)^(n|v1|) v1 [Q lambda_(n-1)(v2..vn)]
//!          - sum over k+l = n, k,l >= 2 of
//!            (-1)^(k + (l-1)(|v1|+..+|vk|)) [Q lambda_k(v1..vk)] [Q lambda_l(v_(k+1)..vn)]
//! ```
//!
//! The two boundary terms are the `k = n-1, l = 1` and `k = 1, l = n-1`
//! summands of the same split sum once `Q lambda_1` is read as `-id`, so the
//! whole recursion can also be written uniformly as
//!
//! ```text
//! lambda_n = - sum over k+l = n, k,l >= 1 of
//!              (-1)^(k + (l-1)(|v1|+..+|vk|)) [Qhat_k(v1..vk)] [Qhat_l(v_(k+1)..vn)]
//! ```
//!
//! with `Qhat_1 = -id` and `Qhat_k = Q lambda_k` otherwise. Both forms are
//! implemented and the test suite pins their equality on every corpus entry.

use super::TransferError;
use crate::dga::Dga;
use crate::graded::Element;
use crate::hodge::HodgeData;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaVariant {
    /// Distinguished boundary terms plus the interior split sum.
    Printed,
    /// Single split sum with `Q lambda_1 = -id`.
    Uniform,
}

impl LambdaVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            LambdaVariant::Printed => "printed",
            LambdaVariant::Uniform => "uniform",
        }
    }
}

/// Evaluates the recursion on tuples of flat harmonic basis indices,
/// memoizing `Q lambda` per contiguous index tuple. Evaluation is pure, so
/// independent evaluators agree entry for entry.
pub(crate) struct TupleEvaluator<'a> {
    dga: &'a Dga,
    hodge: &'a HodgeData,
    variant: LambdaVariant,
    basis: &'a [Element],
    degrees: &'a [usize],
    qmemo: HashMap<Vec<u32>, Element>,
}

impl<'a> TupleEvaluator<'a> {
    pub fn new(
        dga: &'a Dga,
        hodge: &'a HodgeData,
        variant: LambdaVariant,
        basis: &'a [Element],
        degrees: &'a [usize],
    ) -> Self {
        TupleEvaluator { dga, hodge, variant, basis, degrees, qmemo: HashMap::new() }
    }

    fn arg(&self, i: u32) -> &Element {
        &self.basis[i as usize]
    }

    fn degree(&self, i: u32) -> usize {
        self.degrees[i as usize]
    }

    fn q_lambda(&mut self, idx: &[u32]) -> Element {
        if let Some(hit) = self.qmemo.get(idx) {
            return hit.clone();
        }
        let value = self.hodge.homotopy().apply(&self.lambda(idx));
        self.qmemo.insert(idx.to_vec(), value.clone());
        value
    }

    pub fn lambda(&mut self, idx: &[u32]) -> Element {
        let n = idx.len();
        assert!(n >= 2, "the recursion starts at two inputs");
        if n == 2 {
            return self.dga.multiply(self.arg(idx[0]), self.arg(idx[1]));
        }
        match self.variant {
            LambdaVariant::Printed => self.lambda_printed(idx),
            LambdaVariant::Uniform => self.lambda_uniform(idx),
        }
    }

    fn lambda_printed(&mut self, idx: &[u32]) -> Element {
        let n = idx.len();
        let mut acc = Element::zero();

        let q_front = self.q_lambda(&idx[..n - 1]);
        let lead = self.dga.multiply(&q_front, self.arg(idx[n - 1]));
        acc = if (n - 1) % 2 == 0 { acc.add(&lead) } else { acc.sub(&lead) };

        let q_back = self.q_lambda(&idx[1..]);
        let trail = self.dga.multiply(self.arg(idx[0]), &q_back);
        acc = if (n * self.degree(idx[0])) % 2 == 0 { acc.sub(&trail) } else { acc.add(&trail) };

        // Interior splits; prefix holds |v_1| + .. + |v_k|.
        let mut prefix = self.degree(idx[0]) + self.degree(idx[1]);
        for k in 2..=n - 2 {
            let l = n - k;
            let left = self.q_lambda(&idx[..k]);
            let right = self.q_lambda(&idx[k..]);
            let term = self.dga.multiply(&left, &right);
            let exp = k + (l - 1) * prefix;
            acc = if exp % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
            prefix += self.degree(idx[k]);
        }
        acc
    }

    fn lambda_uniform(&mut self, idx: &[u32]) -> Element {
        let n = idx.len();
        let mut acc = Element::zero();
        let mut prefix = 0;
        for k in 1..n {
            let l = n - k;
            prefix += self.degree(idx[k - 1]);
            let left =
                if k == 1 { self.arg(idx[0]).neg() } else { self.q_lambda(&idx[..k]) };
            let right =
                if l == 1 { self.arg(idx[n - 1]).neg() } else { self.q_lambda(&idx[k..]) };
            let term = self.dga.multiply(&left, &right);
            let exp = k + (l - 1) * prefix;
            // Overall minus in front of the sum.
            acc = if exp % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
        }
        acc
    }
}

/// The same recursion on arbitrary elements, multilinear in every slot.
/// Unmemoized; intended for spot checks and small inputs.
pub fn lambda_eval(
    dga: &Dga,
    hodge: &HodgeData,
    variant: LambdaVariant,
    args: &[Element],
) -> Result<Element, TransferError> {
    if args.len() < 2 {
        return Err(TransferError::Arity { got: args.len() });
    }
    if args.iter().any(Element::is_zero) {
        return Ok(Element::zero());
    }
    // Expand the first mixed-degree argument and recurse on homogeneous parts.
    for (i, a) in args.iter().enumerate() {
        if a.homogeneous_degree().is_none() {
            let mut acc = Element::zero();
            for (_, part) in a.homogeneous_parts() {
                let mut parts = args.to_vec();
                parts[i] = part;
                acc = acc.add(&lambda_eval(dga, hodge, variant, &parts)?);
            }
            return Ok(acc);
        }
    }
    Ok(lambda_homogeneous(dga, hodge, variant, args))
}

fn lambda_homogeneous(
    dga: &Dga,
    hodge: &HodgeData,
    variant: LambdaVariant,
    args: &[Element],
) -> Element {
    let n = args.len();
    if n == 2 {
        return dga.multiply(&args[0], &args[1]);
    }
    let q = |sub: &[Element]| hodge.homotopy().apply(&lambda_homogeneous(dga, hodge, variant, sub));
    let deg = |e: &Element| e.homogeneous_degree().unwrap_or(0);

    match variant {
        LambdaVariant::Printed => {
            let mut acc = Element::zero();
            let lead = dga.multiply(&q(&args[..n - 1]), &args[n - 1]);
            acc = if (n - 1) % 2 == 0 { acc.add(&lead) } else { acc.sub(&lead) };
            let trail = dga.multiply(&args[0], &q(&args[1..]));
            acc = if (n * deg(&args[0])) % 2 == 0 { acc.sub(&trail) } else { acc.add(&trail) };
            let mut prefix = deg(&args[0]) + deg(&args[1]);
            for k in 2..=n - 2 {
                let l = n - k;
                let term = dga.multiply(&q(&args[..k]), &q(&args[k..]));
                let exp = k + (l - 1) * prefix;
                acc = if exp % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
                prefix += deg(&args[k]);
            }
            acc
        }
        LambdaVariant::Uniform => {
            let mut acc = Element::zero();
            let mut prefix = 0;
            for k in 1..n {
                let l = n - k;
                prefix += deg(&args[k - 1]);
                let left = if k == 1 { args[0].neg() } else { q(&args[..k]) };
                let right = if l == 1 { args[n - 1].neg() } else { q(&args[k..]) };
                let term = dga.multiply(&left, &right);
                let exp = k + (l - 1) * prefix;
                acc = if exp % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
            }
            acc
        }
    }
}
