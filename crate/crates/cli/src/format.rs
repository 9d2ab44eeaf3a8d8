//! Deterministic number formatting and the CSV table writer.

use std::io::{self, Write};

use torwave_core::CurveTable;

pub const CSV_HEADER: &str = "ka,lambda,delta,xi,re_c_over_beta,im_c_over_beta,classification";

/// Significant digits of every CSV value.
pub const CSV_DIGITS: usize = 9;

/// `value` rounded half-to-even to `digits` significant digits.
///
/// Positional notation for decimal exponents in `[-5, digits)`, otherwise
/// `d.ddde±x`. Zero (of either sign) prints as `0`.
pub fn format_sig(value: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if value == 0.0 {
        return "0".to_owned();
    }
    if !value.is_finite() {
        return value.to_string();
    }
    // Rust's exponent formatting rounds the exact binary value half-to-even.
    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if exponent < -5 || exponent >= digits as i32 {
        return format!("{mantissa}e{exponent}");
    }

    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    let significand: String = mantissa.chars().filter(|c| *c != '.').collect();
    let body = if exponent < 0 {
        format!("0.{}{}", "0".repeat((-exponent - 1) as usize), significand)
    } else {
        let split = exponent as usize + 1;
        let (int, frac) = significand.split_at(split);
        if frac.is_empty() {
            int.to_owned()
        } else {
            format!("{int}.{frac}")
        }
    };
    format!("{sign}{body}")
}

pub fn csv_value(value: f64) -> String {
    format_sig(value, CSV_DIGITS)
}

/// Writes `table` as CSV: fixed header, one `\n`-terminated line per row.
pub fn write_csv<W: Write>(table: &CurveTable, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in &table.rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            csv_value(row.ka),
            csv_value(row.lambda),
            csv_value(row.delta),
            csv_value(row.xi),
            csv_value(row.c_over_beta.re),
            csv_value(row.c_over_beta.im),
            row.classification.as_str()
        )?;
    }
    out.flush()
}

pub fn csv_string(table: &CurveTable) -> String {
    let mut buf = Vec::new();
    write_csv(table, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
