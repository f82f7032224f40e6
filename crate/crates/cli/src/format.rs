//! Deterministic text output: 17-significant-digit floats, JSON with a fixed
//! field order, and CSV.

use std::io;

use eigensum_core::report::ParamValue;
use eigensum_core::{BoundReport, Selection};
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};

/// `x` with 17 significant digits, in the style of C's `%.17g`.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let body = if !(-4..17).contains(&exp) {
        let frac = digits[1..].trim_end_matches('0');
        let sign = if exp < 0 { '-' } else { '+' };
        if frac.is_empty() {
            format!("{}e{sign}{:02}", &digits[..1], exp.abs())
        } else {
            format!("{}.{frac}e{sign}{:02}", &digits[..1], exp.abs())
        }
    } else if exp < 0 {
        let s = format!("0.{}{digits}", "0".repeat((-exp - 1) as usize));
        s.trim_end_matches('0').to_string()
    } else {
        let point = exp as usize + 1;
        let (int, frac) = digits.split_at(point);
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            int.to_string()
        } else {
            format!("{int}.{frac}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Pretty JSON whose floats go through [`g17`].
struct Sig17<'a>(PrettyFormatter<'a>);

impl Formatter for Sig17<'_> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(g17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + io::Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + io::Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Sig17(PrettyFormatter::with_indent(b"  ")));
    value.serialize(&mut ser).expect("in-memory JSON serialization");
    buf.push(b'\n');
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

fn csv_text(write: impl FnOnce(&mut csv::Writer<&mut Vec<u8>>) -> csv::Result<()>) -> String {
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        write(&mut w).expect("in-memory CSV");
        w.flush().expect("in-memory CSV");
    }
    String::from_utf8(buf).expect("CSV fields are UTF-8")
}

/// `index,value` rows.
pub fn values_csv(values: &[f64]) -> String {
    csv_text(|w| {
        w.write_record(["index", "value"])?;
        for (i, &x) in values.iter().enumerate() {
            w.write_record([i.to_string(), g17(x)])?;
        }
        Ok(())
    })
}

fn param_text(v: &ParamValue) -> String {
    match v {
        ParamValue::Real(x) => g17(*x),
        other => other.to_string(),
    }
}

fn selection_text(s: &Option<Selection>) -> String {
    match s {
        None => String::new(),
        Some(Selection::Subset(v)) => v.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
        Some(Selection::Pairs(p)) => p.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" "),
    }
}

pub const REPORT_CSV_HEADER: [&str; 11] = [
    "name",
    "params",
    "relation",
    "bound",
    "measured",
    "slack",
    "verdict",
    "holds",
    "asserted",
    "pairs_or_subset",
    "note",
];

/// One row per report, columns as in [`REPORT_CSV_HEADER`]. Params are
/// `key=value` joined by `;`.
pub fn reports_csv(reports: &[BoundReport]) -> String {
    csv_text(|w| {
        w.write_record(REPORT_CSV_HEADER)?;
        for r in reports {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={}", param_text(v))).collect();
            w.write_record([
                r.name.as_str().to_string(),
                params.join(";"),
                r.relation.as_str().to_string(),
                g17(r.bound),
                g17(r.measured),
                g17(r.slack),
                r.verdict.as_str().to_string(),
                r.holds().to_string(),
                r.asserted.to_string(),
                selection_text(&r.selection),
                r.note.clone().unwrap_or_default(),
            ])?;
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g17_round_trips() {
        for x in [
            1.0,
            -2.5,
            0.1,
            1.0 / 3.0,
            1e-7,
            6.02e23,
            123456789.0,
            -0.000123,
            f64::MAX,
            f64::MIN_POSITIVE,
        ] {
            let s = g17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn g17_shapes() {
        assert_eq!(g17(4.0), "4");
        assert_eq!(g17(-0.0), "0");
        assert_eq!(g17(0.5), "0.5");
        assert_eq!(g17(0.1), "0.10000000000000001");
        assert_eq!(g17(1e-7), "9.9999999999999995e-08");
        assert_eq!(g17(1e20), "1e+20");
        assert_eq!(g17(0.0001), "0.0001");
    }

    #[test]
    fn json_is_valid_and_uses_g17() {
        let text = to_json(&serde_json::json!({"a": 0.1, "b": [1.5, f64::NAN]}));
        assert!(text.contains("0.10000000000000001"));
        let back: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(back["b"][1], serde_json::Value::Null);
    }
}
