//! Explicit identification of naturally graded filiform Lie algebras with the
//! model algebra or the even-dimensional pairing algebra.

use leibniz_core::{
    apply_basis_change, grading_derivation, grading_eigenspaces, is_filiform, is_lie, natural_gradation, AlgebraError,
    BasisChange, Matrix, StructureTensor, Vector,
};

use crate::{make_n_n1, make_q2n};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiliformNormalForm {
    /// `make_n_n1(n)`
    Model(usize),
    /// `make_q2n(m)`, dimension `2m`
    Pairing(usize),
}

impl FiliformNormalForm {
    pub fn tensor(&self) -> StructureTensor {
        match *self {
            FiliformNormalForm::Model(n) => make_n_n1(n).expect("n >= 3"),
            FiliformNormalForm::Pairing(m) => make_q2n(m).expect("m >= 3"),
        }
    }
}

fn br(t: &StructureTensor, a: &Vector, b: &Vector) -> Vector {
    Vector::from_sparse(t.dim(), &t.bracket_sparse(&a.to_sparse(), &b.to_sparse()))
}

/// Nonzero `(s, t)` with `s a + t b = 0`, if the pair spans a line or less.
fn kernel_pair(a: &Vector, b: &Vector) -> Option<(leibniz_core::Scalar, leibniz_core::Scalar)> {
    let m = Matrix::from_columns(&[a.clone(), b.clone()]);
    let ns = m.nullspace();
    if ns.len() != 1 {
        return None;
    }
    Some((ns[0].coords[0].clone(), ns[0].coords[1].clone()))
}

fn combine(s: &leibniz_core::Scalar, u: &Vector, t: &leibniz_core::Scalar, v: &Vector) -> Vector {
    u.scaled(s).add(&v.scaled(t))
}

/// Homogeneous basis of a naturally graded algebra, grouped by weight.
fn graded_pieces(t: &StructureTensor) -> Result<Option<Vec<Vec<Vector>>>, AlgebraError> {
    let g = natural_gradation(t)?;
    let top = *g.weights.iter().max().unwrap_or(&1);
    let adapted = apply_basis_change(t, &g.adapted_basis())?;
    if adapted.entries().eq(g.induced.entries()) {
        let mut pieces = vec![Vec::new(); top];
        for (s, w) in g.sections.iter().zip(&g.weights) {
            pieces[w - 1].push(s.clone());
        }
        return Ok(Some(pieces));
    }
    Ok(grading_derivation(t)?.map(|d| grading_eigenspaces(&d, top)))
}

/// Finds the normal form of a filiform Lie algebra together with a basis change
/// that turns `t` into it exactly, or `None` if `t` is not naturally graded.
pub fn match_filiform_normal_form(t: &StructureTensor) -> Result<Option<(FiliformNormalForm, BasisChange)>, AlgebraError> {
    if !is_filiform(t) || !is_lie(t) {
        return Err(AlgebraError::NotFiliformLie);
    }
    let n = t.dim();
    let Some(pieces) = graded_pieces(t)? else { return Ok(None) };
    let (u, v) = (&pieces[0][0], &pieces[0][1]);
    let pairing = (1..pieces.len()).any(|i| {
        (1..pieces.len()).any(|j| pieces[i].iter().any(|a| pieces[j].iter().any(|b| !br(t, a, b).is_zero())))
    });
    let mut cols: Vec<Vector> = Vec::with_capacity(n);
    let form;
    if n == 3 {
        cols.push(u.clone());
        cols.push(v.clone());
        form = FiliformNormalForm::Model(3);
    } else {
        let w2 = &pieces[1][0];
        let Some((s, r)) = kernel_pair(&br(t, u, w2), &br(t, v, w2)) else { return Ok(None) };
        let x2 = combine(&s, u, &r, v);
        let x1 = if pairing {
            let top = &pieces[n - 3][0];
            let Some((s1, r1)) = kernel_pair(&br(t, top, u), &br(t, top, v)) else { return Ok(None) };
            combine(&s1, u, &r1, v)
        } else if r == leibniz_core::scalar::zero() {
            v.clone()
        } else {
            u.clone()
        };
        cols.push(x1);
        cols.push(x2);
        form = if pairing { FiliformNormalForm::Pairing(n / 2) } else { FiliformNormalForm::Model(n) };
    }
    let chain_end = if pairing { n - 1 } else { n };
    let x3 = br(t, &cols[1], &cols[0]);
    cols.push(x3);
    while cols.len() < chain_end {
        let next = br(t, cols.last().expect("nonempty"), &cols[0]);
        cols.push(next);
    }
    if pairing {
        let xn = br(t, &cols[1], &cols[n - 2]);
        cols.push(xn);
    }
    let Ok(p) = BasisChange::from_columns(&cols) else { return Ok(None) };
    let moved = apply_basis_change(t, &p)?;
    let target = form.tensor();
    if moved.entries().eq(target.entries()) {
        Ok(Some((form, p)))
    } else {
        Ok(None)
    }
}
