//! Text, JSON and CSV renderings shared by the commands.
//!
//! JSON is compact with fixed field order, and every coefficient is a
//! decimal string.

use pentaseries_core::{PentTerm, Term, TruncatedSeries};
use serde::{Deserialize, Serialize};

pub fn series_text(series: &TruncatedSeries) -> String {
    series.to_string()
}

pub fn series_json(series: &TruncatedSeries) -> String {
    to_json(series)
}

pub fn series_csv(series: &TruncatedSeries) -> String {
    let mut out = String::from("exponent,coefficient\n");
    for (k, c) in series.coeffs().iter().enumerate() {
        out.push_str(&format!("{k},{c}\n"));
    }
    out.pop();
    out
}

/// One `sign exponent` line per term.
pub fn terms_text(terms: &[Term]) -> String {
    terms.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

pub fn terms_json(terms: &[Term]) -> String {
    to_json(terms)
}

pub fn terms_csv(terms: &[Term]) -> String {
    let mut lines = vec!["sign,exp".to_owned()];
    lines.extend(terms.iter().map(|t| format!("{},{}", t.sign.as_i8(), t.exponent)));
    lines.join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentTermRecord {
    pub k: i64,
    pub exp: u64,
    pub sign: i8,
}

impl From<&PentTerm> for PentTermRecord {
    fn from(t: &PentTerm) -> Self {
        PentTermRecord { k: t.k, exp: t.exponent, sign: t.sign.as_i8() }
    }
}

/// One `k=-3 exp=15 sign=-` line per term.
pub fn pent_terms_text(terms: &[PentTerm]) -> String {
    terms.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

pub fn pent_terms_json(terms: &[PentTerm]) -> String {
    to_json(&terms.iter().map(PentTermRecord::from).collect::<Vec<_>>())
}

pub fn pent_terms_csv(terms: &[PentTerm]) -> String {
    let mut lines = vec!["k,exp,sign".to_owned()];
    lines.extend(terms.iter().map(|t| format!("{},{},{}", t.k, t.exponent, t.sign.as_i8())));
    lines.join("\n")
}

pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize infallibly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use pentaseries_core::{closed_form_series, method1_stream, pent_terms_upto};

    #[test]
    fn series_renderings() {
        let s = closed_form_series(12);
        assert_eq!(series_text(&s), "1 - x - x^2 + x^5 + x^7 - x^12");
        assert_eq!(
            series_json(&closed_form_series(2)),
            r#"{"order":2,"coeffs":["1","-1","-1"]}"#
        );
        assert_eq!(series_csv(&closed_form_series(1)), "exponent,coefficient\n0,1\n1,-1");
    }

    #[test]
    fn term_renderings() {
        let t = method1_stream(3);
        assert_eq!(terms_text(&t), "+ 0\n- 1\n- 2");
        assert_eq!(terms_json(&t), r#"[{"sign":1,"exp":0},{"sign":-1,"exp":1},{"sign":-1,"exp":2}]"#);
        assert_eq!(terms_csv(&t), "sign,exp\n1,0\n-1,1\n-1,2");
    }

    #[test]
    fn pent_renderings() {
        let t = pent_terms_upto(15);
        assert_eq!(pent_terms_text(&t).lines().last(), Some("k=-3 exp=15 sign=-"));
        assert!(pent_terms_json(&t).ends_with(r#"{"k":-3,"exp":15,"sign":-1}]"#));
    }
}
