use super::poly::Polynomial;
use super::groebner::GroebnerBasis;
use crate::field::FieldElement;

/// All points of GF(q)ⁿ on which every basis polynomial vanishes, in
/// lexicographic order of element indices.
///
/// Variables are assigned depth-first in the order x₁, x₂, …; a branch is cut
/// as soon as some partially substituted basis element becomes a nonzero
/// constant.
pub fn variety(gb: &GroebnerBasis) -> Vec<Vec<FieldElement>> {
    let mut out = Vec::new();
    if gb.is_unit_ideal() {
        return out;
    }
    let mut point = Vec::with_capacity(gb.ring.nvars());
    descend(gb, gb.polys.clone(), &mut point, &mut out);
    out
}

fn descend(
    gb: &GroebnerBasis,
    polys: Vec<Polynomial>,
    point: &mut Vec<FieldElement>,
    out: &mut Vec<Vec<FieldElement>>,
) {
    let ring = &gb.ring;
    let var = point.len();
    if var == ring.nvars() {
        out.push(point.clone());
        return;
    }
    for value in ring.field().elements() {
        let mut next = Vec::with_capacity(polys.len());
        let mut dead = false;
        for p in &polys {
            let s = ring.substitute(p, var, value);
            if s.is_unit() {
                dead = true;
                break;
            }
            if !s.is_zero() {
                next.push(s);
            }
        }
        if dead {
            continue;
        }
        point.push(value);
        descend(gb, next, point, out);
        point.pop();
    }
}
