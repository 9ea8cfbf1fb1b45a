//! LaTeX rendering of class vectors.
//!
//! The even/odd and total Prym-null classes (and the theta-null
//! pushforward) are conventionally displayed with their common factor
//! 2^{g-3} pulled out; [`class_to_latex`] supports that layout through an
//! optional power-of-two factor. The grouping is purely cosmetic; the
//! underlying coefficients are unchanged.

use num::{BigRational, One, Signed};

use crate::class_space::{BasisClass, ClassVector};
use crate::rat::pow2;

fn label_to_latex(class: &BasisClass) -> String {
    match class {
        BasisClass::Lambda => r"\lambda".to_string(),
        BasisClass::Delta(i) => format!(r"\delta_{{{i}}}"),
        BasisClass::Delta0T => r"\delta_{0}^{\mathrm{t}}".to_string(),
        BasisClass::Delta0P => r"\delta_{0}^{\mathrm{p}}".to_string(),
        BasisClass::Delta0B => r"\delta_{0}^{\mathrm{b}}".to_string(),
        BasisClass::DeltaN(i) => format!(r"\delta_{{{i}}}^{{\mathrm{{n}}}}"),
        BasisClass::DeltaT(i) => format!(r"\delta_{{{i}}}^{{\mathrm{{t}}}}"),
        BasisClass::DeltaP(i) => format!(r"\delta_{{{i}}}^{{\mathrm{{p}}}}"),
        BasisClass::Delta0N => r"\delta_{0}^{\mathrm{n}}".to_string(),
        BasisClass::DeltaPlus(i) => format!(r"\delta_{{{i}}}^{{+}}"),
        BasisClass::DeltaMinus(i) => format!(r"\delta_{{{i}}}^{{-}}"),
    }
}

fn rational_to_latex(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        let sign = if q.is_negative() { "-" } else { "" };
        format!(r"{sign}\frac{{{}}}{{{}}}", q.numer().magnitude(), q.denom())
    }
}

/// One signed term `± coeff·label`, with unit coefficients elided.
fn push_term(out: &mut String, coeff: &BigRational, label: &str, first: bool) {
    let magnitude = coeff.abs();
    if first {
        if coeff.is_negative() {
            out.push('-');
        }
    } else if coeff.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if !magnitude.is_one() {
        out.push_str(&rational_to_latex(&magnitude));
        out.push_str(r"\,");
    }
    out.push_str(label);
}

/// Render a class vector as a LaTeX expression. With
/// `factor_log2 = Some(e)`, the common factor 2^e is pulled out and every
/// coefficient displayed divided by it.
pub fn class_to_latex(class: &ClassVector, factor_log2: Option<i64>) -> String {
    if class.is_zero() {
        return "0".to_string();
    }
    let divisor = factor_log2.map(pow2);
    let mut body = String::new();
    let mut first = true;
    for (label, coeff) in class.iter() {
        let shown = match &divisor {
            Some(d) => coeff / d,
            None => coeff.clone(),
        };
        push_term(&mut body, &shown, &label_to_latex(label), first);
        first = false;
    }
    match factor_log2 {
        Some(e) => format!(r"2^{{{e}}}\,\left({body}\right)"),
        None => body,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_space::Genus;
    use crate::known_classes::{prym_null_even, theta_null_class};

    #[test]
    fn factored_layout_at_genus_five() {
        let genus = Genus::new(5).unwrap();
        let even = prym_null_even(genus);
        let tex = class_to_latex(&even, Some(2));
        assert!(tex.starts_with(r"2^{2}\,\left(17\,\lambda"), "{tex}");
        assert!(tex.contains(r"\frac{17}{4}\,\delta_{0}^{\mathrm{b}}"), "{tex}");
        assert!(tex.contains(r"7\,\delta_{2}^{\mathrm{n}}"), "{tex}");
        assert!(tex.contains(r"9\,\delta_{2}^{\mathrm{t}}"), "{tex}");
    }

    #[test]
    fn plain_layout_for_theta_null() {
        let genus = Genus::new(5).unwrap();
        let tex = class_to_latex(&theta_null_class(genus), None);
        assert!(tex.starts_with(r"\frac{1}{4}\,\lambda"), "{tex}");
        assert!(tex.contains(r"- \frac{1}{16}\,\delta_{0}^{\mathrm{n}}"), "{tex}");
        assert!(tex.ends_with(r"\frac{1}{2}\,\delta_{2}^{-}"), "{tex}");
    }
}
