//! Sparse term maps shared by the polynomial types.
//!
//! Every map here is kept canonical: no stored coefficient is zero.

use alloc::collections::BTreeMap;

use num_traits::Zero;

use crate::gaussian::GaussianRational;
use crate::monomial::Monomial;

pub(crate) type Terms<M> = BTreeMap<M, GaussianRational>;

pub(crate) fn add_term<M: Monomial>(terms: &mut Terms<M>, m: M, c: &GaussianRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub(crate) fn add<M: Monomial>(a: &Terms<M>, b: &Terms<M>) -> Terms<M> {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, m.clone(), c);
    }
    out
}

pub(crate) fn sub<M: Monomial>(a: &Terms<M>, b: &Terms<M>) -> Terms<M> {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, m.clone(), &-c);
    }
    out
}

pub(crate) fn scale<M: Monomial>(a: &Terms<M>, k: &GaussianRational) -> Terms<M> {
    if k.is_zero() {
        return Terms::new();
    }
    a.iter().map(|(m, c)| (m.clone(), c * k)).collect()
}

pub(crate) fn mul<M: Monomial>(a: &Terms<M>, b: &Terms<M>) -> Terms<M> {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            add_term(&mut out, ma.mul(mb), &(ca * cb));
        }
    }
    out
}

fn sub_scaled_shift<M: Monomial>(p: &mut Terms<M>, b: &Terms<M>, shift: &M, k: &GaussianRational) {
    for (m, c) in b {
        add_term(p, m.mul(shift), &-(c * k));
    }
}

/// Division by a single divisor with respect to the key order.
///
/// Returns `(q, r)` with `a = q·b + r` where no term of `r` is divisible
/// by the leading monomial of `b`.
pub(crate) fn div_rem<M: Monomial>(a: &Terms<M>, b: &Terms<M>) -> Option<(Terms<M>, Terms<M>)> {
    let (lead_m, lead_c) = b.last_key_value()?;
    let lead_inv = lead_c.inv()?;
    let mut p = a.clone();
    let mut q = Terms::new();
    let mut r = Terms::new();
    while let Some((m, c)) = p.last_key_value() {
        match m.div(lead_m) {
            Some(t) => {
                let k = c * &lead_inv;
                sub_scaled_shift(&mut p, b, &t, &k);
                add_term(&mut q, t, &k);
            }
            None => {
                let (m, c) = p.pop_last().expect("nonempty");
                add_term(&mut r, m, &c);
            }
        }
    }
    Some((q, r))
}

/// Terms of minimal total degree.
pub(crate) fn lowest<M: Monomial>(a: &Terms<M>) -> Terms<M> {
    let Some(min) = a.keys().map(Monomial::total_degree).min() else {
        return Terms::new();
    };
    a.iter()
        .filter(|(m, _)| m.total_degree() == min)
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect()
}
