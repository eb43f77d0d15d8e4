//! Triple Massey products: find bounding elements by canonical linear solve,
//! return the class together with a basis of its indeterminacy.

use super::verdict::MasseySystem;
use super::FormalityError;
use crate::cdga::{Cdga, CdgaElement};
use crate::matrix::{coords_in_rowspace, RationalMatrix};
use crate::rational::Rational;
use num_traits::Zero;

fn closed_homogeneous(
    algebra: &Cdga,
    e: &CdgaElement,
    which: &str,
) -> Result<i64, FormalityError> {
    let deg = algebra
        .degree_of(e)
        .map_err(|_| FormalityError::NonHomogeneousInput(which.to_string()))?
        .ok_or_else(|| FormalityError::InvalidInput(format!("class `{which}` is zero")))?;
    if !algebra.d(e).is_zero() {
        return Err(FormalityError::InvalidInput(format!(
            "`{which}` is not closed"
        )));
    }
    Ok(deg)
}

/// Primitive for an exact element, with the canonical free-variables-zero
/// solution; `None` when the element is not exact.
fn primitive(algebra: &Cdga, e: &CdgaElement, degree: i64) -> Option<CdgaElement> {
    if e.is_zero() {
        return Some(algebra.from_coords(degree - 1, &vec![
            Rational::zero();
            algebra.dim_in_degree(degree - 1)
        ]));
    }
    let rhs = algebra.coords(e, degree);
    let d = algebra.differential_matrix(degree - 1);
    let sol = d.solve(&rhs)?;
    Some(algebra.from_coords(degree - 1, &sol))
}

/// The triple product `<[a],[b],[c]>` for closed elements with
/// `[a][b] = [b][c] = 0`: bounding elements by canonical solve, the class of
/// `u c - (-1)^{|a|} a v`, and the indeterminacy `[a] H + H [c]`.
pub fn massey_triple(
    algebra: &Cdga,
    a: &CdgaElement,
    b: &CdgaElement,
    c: &CdgaElement,
    max_degree: i64,
) -> Result<MasseySystem, FormalityError> {
    let da = closed_homogeneous(algebra, a, "a")?;
    let db = closed_homogeneous(algebra, b, "b")?;
    let dc = closed_homogeneous(algebra, c, "c")?;
    let degree = da + db + dc - 1;
    if degree > max_degree {
        return Err(FormalityError::InvalidInput(format!(
            "product degree {degree} exceeds the bound {max_degree}"
        )));
    }
    let ab = algebra.mul(a, b);
    let u = primitive(algebra, &ab, da + db)
        .ok_or(FormalityError::MasseyUndefined { which: "a][b" })?;
    let bc = algebra.mul(b, c);
    let v = primitive(algebra, &bc, db + dc)
        .ok_or(FormalityError::MasseyUndefined { which: "b][c" })?;

    let mut omega = algebra.mul(&u, c);
    let av = algebra.mul(a, &v);
    omega = if da % 2 == 0 {
        omega.sub(&av)
    } else {
        omega.add(&av)
    };
    let space = algebra.cohomology(degree);
    let class_coords = algebra.class_of(&space, &omega)?;

    // indeterminacy [a] H^{|v|} + H^{|u|} [c]
    let mut indeterminacy = Vec::new();
    let hv = algebra.cohomology(db + dc - 1);
    for rep in &hv.reps {
        let r = algebra.from_coords(db + dc - 1, rep);
        let prod = algebra.mul(a, &r);
        let cls = algebra.class_of(&space, &prod)?;
        if cls.iter().any(|x| !x.is_zero()) {
            indeterminacy.push(cls);
        }
    }
    let hu = algebra.cohomology(da + db - 1);
    for rep in &hu.reps {
        let r = algebra.from_coords(da + db - 1, rep);
        let prod = algebra.mul(&r, c);
        let cls = algebra.class_of(&space, &prod)?;
        if cls.iter().any(|x| !x.is_zero()) {
            indeterminacy.push(cls);
        }
    }
    let indeterminacy = if indeterminacy.is_empty() {
        Vec::new()
    } else {
        let ech = RationalMatrix::from_rows(indeterminacy).rref();
        (0..ech.pivots.len())
            .map(|r| ech.matrix.row(r).to_vec())
            .collect()
    };
    let avoids_zero = if class_coords.iter().all(Zero::is_zero) {
        false
    } else {
        coords_in_rowspace(&class_coords, &indeterminacy).is_none()
    };
    Ok(MasseySystem {
        degree,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        u,
        v,
        product: omega,
        class_coords,
        indeterminacy,
        avoids_zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{GeneratorSpec, Generators, SullivanAlgebra};

    /// The nonformal control: /\(x3, y3, z5) with dz = x y.
    fn nonformal() -> Cdga {
        let gens = Generators::new(vec![
            GeneratorSpec::new("x", 3),
            GeneratorSpec::new("y", 3),
            GeneratorSpec::new("z", 5),
        ])
        .unwrap();
        let xy = gens.mul(&gens.generator(0), &gens.generator(1));
        Cdga::free(SullivanAlgebra::new(gens, vec![("z".into(), xy)]).unwrap())
    }

    #[test]
    fn triple_x_x_y_detects_the_obstruction() {
        // hand computation recorded: x^2 = 0 so u = 0; dv = xy gives v = z;
        // the product is u y - (-1)^3 x v = x z, nonzero in H^8 with zero
        // indeterminacy since H^5 = H^2 = 0
        let c = nonformal();
        let Cdga::Free(alg) = &c else { unreachable!() };
        let g = alg.gens();
        let x = CdgaElement::Free(g.generator(g.id_of("x").unwrap()));
        let y = CdgaElement::Free(g.generator(g.id_of("y").unwrap()));
        let sys = massey_triple(&c, &x, &x, &y, 10).unwrap();
        assert_eq!(sys.degree, 8);
        assert!(sys.u.is_zero());
        let z = CdgaElement::Free(g.generator(g.id_of("z").unwrap()));
        assert_eq!(sys.v, z);
        let xz = c.mul(&x, &z);
        assert_eq!(sys.product, xz);
        assert_eq!(sys.indeterminacy_dim(), 0);
        assert!(sys.avoids_zero);
        assert!(sys.reverify(&c).unwrap());
    }

    #[test]
    fn identically_zero_products_give_the_zero_class() {
        // in /\(x3, y3) both x^2 = 0 and xy... xy is nonzero; use (x, x, x):
        // x^2 = 0 on the nose so u = v = 0 and the class is zero
        let gens = Generators::new(vec![
            GeneratorSpec::new("x", 3),
            GeneratorSpec::new("y", 3),
        ])
        .unwrap();
        let c = Cdga::free(SullivanAlgebra::new(gens, Vec::new()).unwrap());
        let Cdga::Free(alg) = &c else { unreachable!() };
        let x = CdgaElement::Free(alg.gens().generator(0));
        let sys = massey_triple(&c, &x, &x, &x, 10).unwrap();
        assert!(sys.u.is_zero() && sys.v.is_zero());
        assert!(sys.class_coords.iter().all(num_traits::Zero::is_zero));
        assert!(!sys.avoids_zero);
    }

    #[test]
    fn non_vanishing_product_is_undefined() {
        let gens = Generators::new(vec![
            GeneratorSpec::new("x", 3),
            GeneratorSpec::new("y", 3),
        ])
        .unwrap();
        let c = Cdga::free(SullivanAlgebra::new(gens, Vec::new()).unwrap());
        let Cdga::Free(alg) = &c else { unreachable!() };
        let x = CdgaElement::Free(alg.gens().generator(0));
        let y = CdgaElement::Free(alg.gens().generator(1));
        // [x][y] != 0 in H^6
        let err = massey_triple(&c, &x, &y, &x, 10);
        assert!(matches!(err, Err(FormalityError::MasseyUndefined { .. })));
    }
}
