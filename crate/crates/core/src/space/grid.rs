//! Axis-parallel staircases in the ℓ1 square.

use crate::group::GroupElement;

type Corner = (GroupElement, GroupElement);

fn dedup(mut corners: Vec<Corner>) -> Vec<Corner> {
    corners.dedup();
    corners
}

/// `u` first, then `w`.
pub(crate) fn staircase((u1, w1): (&GroupElement, &GroupElement), (u2, w2): (&GroupElement, &GroupElement)) -> Vec<Corner> {
    dedup(vec![(u1.clone(), w1.clone()), (u2.clone(), w1.clone()), (u2.clone(), w2.clone())])
}

fn leg_length(a: &Corner, b: &Corner) -> GroupElement {
    &(&b.0 - &a.0).abs() + &(&b.1 - &a.1).abs()
}

fn toward(from: &GroupElement, to: &GroupElement, t: &GroupElement) -> GroupElement {
    if to >= from {
        from + t
    } else {
        from - t
    }
}

pub(crate) fn eval(corners: &[Corner], t: &GroupElement) -> Corner {
    let mut rest = t.clone();
    for leg in corners.windows(2) {
        let (a, b) = (&leg[0], &leg[1]);
        let len = leg_length(a, b);
        if rest <= len {
            return if a.0 != b.0 {
                (toward(&a.0, &b.0, &rest), a.1.clone())
            } else {
                (a.0.clone(), toward(&a.1, &b.1, &rest))
            };
        }
        rest = &rest - &len;
    }
    corners.last().expect("at least one corner").clone()
}

fn between(v: &GroupElement, a: &GroupElement, b: &GroupElement) -> bool {
    (a <= v && v <= b) || (b <= v && v <= a)
}

pub(crate) fn param(corners: &[Corner], (u, w): (&GroupElement, &GroupElement)) -> Option<GroupElement> {
    let first = &corners[0];
    if (&first.0, &first.1) == (u, w) {
        return Some(GroupElement::zero(u.group()));
    }
    let mut acc = GroupElement::zero(u.group());
    for leg in corners.windows(2) {
        let (a, b) = (&leg[0], &leg[1]);
        if between(u, &a.0, &b.0) && between(w, &a.1, &b.1) {
            return Some(&acc + &(&(u - &a.0).abs() + &(w - &a.1).abs()));
        }
        acc = &acc + &leg_length(a, b);
    }
    None
}

pub(crate) fn join(a: &[Corner], b: &[Corner]) -> Vec<Corner> {
    dedup(a.iter().chain(b.iter().skip(1)).cloned().collect())
}

fn lo_hi<'a>(a: &'a GroupElement, b: &'a GroupElement) -> (&'a GroupElement, &'a GroupElement) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn legs(corners: &[Corner]) -> Vec<(Corner, Corner)> {
    if corners.len() == 1 {
        vec![(corners[0].clone(), corners[0].clone())]
    } else {
        corners.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect()
    }
}

/// Connected components of the intersection of two staircases, as merged
/// closed parameter ranges along `a`.
pub(crate) fn intersect(a: &[Corner], b: &[Corner]) -> Vec<(GroupElement, GroupElement)> {
    let mut ranges = Vec::new();
    for (a0, a1) in legs(a) {
        for (b0, b1) in legs(b) {
            let (au, av) = lo_hi(&a0.0, &a1.0);
            let (bu, bv) = lo_hi(&b0.0, &b1.0);
            let (aw, ax) = lo_hi(&a0.1, &a1.1);
            let (bw, bx) = lo_hi(&b0.1, &b1.1);
            let (ulo, uhi) = (au.max(bu), av.min(bv));
            let (wlo, whi) = (aw.max(bw), ax.min(bx));
            if ulo > uhi || wlo > whi {
                continue;
            }
            let p = param(a, (ulo, wlo)).expect("box corner lies on the leg");
            let q = param(a, (uhi, whi)).expect("box corner lies on the leg");
            ranges.push(if p <= q { (p, q) } else { (q, p) });
        }
    }
    ranges.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("same group"));
    let mut merged: Vec<(GroupElement, GroupElement)> = Vec::new();
    for (lo, hi) in ranges {
        match merged.last_mut() {
            Some(last) if lo <= last.1 => {
                if hi > last.1 {
                    last.1 = hi;
                }
            }
            _ => merged.push((lo, hi)),
        }
    }
    merged
}
