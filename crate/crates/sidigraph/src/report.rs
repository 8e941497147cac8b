//! Bundled analysis of one sidigraph, rendered as a table or as JSON.
//!
//! The JSON keys are fixed. Floats carry 12 significant digits and
//! polynomial coefficients are decimal strings, so arbitrarily large
//! integers survive exactly.

use std::fmt::Write as _;

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;
use sidigraph_core::charpoly::charpoly_exact;
use sidigraph_core::cycles::classify;
use sidigraph_core::spectra::{classify_spectrum, energy_from_spectrum, roots, CLASS_TOL};
use sidigraph_core::{Result, Sidigraph};

use crate::format::coefficient_strings;

/// `x` with 12 significant digits in the style of C's `%.12g`.
pub fn sig12(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, x);
        trim_zeros(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// A float serialized through [`sig12`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sig12(pub f64);

impl Serialize for Sig12 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(sig12(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureFlags {
    pub bipartite: bool,
    pub strongly_connected: bool,
    pub symmetric: bool,
    pub cycle_balanced: bool,
    pub in_delta1: bool,
    pub in_delta2: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumFlags {
    pub integral: bool,
    pub real: bool,
    pub gaussian: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub input_name: String,
    pub n: usize,
    pub arc_count: usize,
    /// Leading coefficient first.
    pub charpoly: Vec<String>,
    /// `[re, im]` pairs sorted by real then imaginary part.
    pub spectrum: Vec<[Sig12; 2]>,
    pub energy: Sig12,
    pub flags: StructureFlags,
    pub spectrum_class: SpectrumFlags,
}

pub fn analyze(name: &str, s: &Sidigraph, tol_class: f64) -> Result<AnalysisReport> {
    let phi = charpoly_exact(s)?;
    let sp = roots(&phi)?;
    let class = classify(s)?;
    let sc = classify_spectrum(&sp, tol_class);
    Ok(AnalysisReport {
        input_name: name.to_string(),
        n: s.order(),
        arc_count: s.arc_count(),
        charpoly: coefficient_strings(&phi),
        spectrum: sp
            .roots
            .iter()
            .map(|z| [Sig12(z.re), Sig12(z.im)])
            .collect(),
        energy: Sig12(energy_from_spectrum(&sp)),
        flags: StructureFlags {
            bipartite: class.is_bipartite,
            strongly_connected: s.is_strongly_connected(),
            symmetric: s.is_symmetric(),
            cycle_balanced: class.is_cycle_balanced,
            in_delta1: class.in_delta1,
            in_delta2: class.in_delta2,
        },
        spectrum_class: SpectrumFlags {
            integral: sc.integral,
            real: sc.real,
            gaussian: sc.gaussian,
        },
    })
}

/// Default tolerance for the spectrum classes.
pub const DEFAULT_TOL_CLASS: f64 = CLASS_TOL;

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Polynomial in the usual notation, e.g. `z^4 - 3z^2 + 2z`.
    pub fn charpoly_text(&self) -> String {
        let deg = self.n;
        let mut out = String::new();
        for (i, c) in self.charpoly.iter().enumerate() {
            let k = deg - i;
            let (neg, mag) = match c.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, c.as_str()),
            };
            if mag == "0" {
                continue;
            }
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" || k == 0 {
                out.push_str(mag);
            }
            match k {
                0 => {}
                1 => out.push('z'),
                _ => {
                    let _ = write!(out, "z^{k}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let yes = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "input               {}", self.input_name);
        let _ = writeln!(out, "order               {}", self.n);
        let _ = writeln!(out, "arcs                {}", self.arc_count);
        let _ = writeln!(out, "charpoly            {}", self.charpoly_text());
        let _ = writeln!(out, "energy              {}", sig12(self.energy.0));
        let f = &self.flags;
        let _ = writeln!(out, "bipartite           {}", yes(f.bipartite));
        let _ = writeln!(out, "strongly connected  {}", yes(f.strongly_connected));
        let _ = writeln!(out, "symmetric           {}", yes(f.symmetric));
        let _ = writeln!(out, "cycle balanced      {}", yes(f.cycle_balanced));
        let _ = writeln!(out, "delta1 member       {}", yes(f.in_delta1));
        let _ = writeln!(out, "delta2 member       {}", yes(f.in_delta2));
        let c = &self.spectrum_class;
        let _ = writeln!(out, "integral spectrum   {}", yes(c.integral));
        let _ = writeln!(out, "real spectrum       {}", yes(c.real));
        let _ = writeln!(out, "gaussian spectrum   {}", yes(c.gaussian));
        let _ = writeln!(out, "spectrum");
        for [re, im] in &self.spectrum {
            let _ = writeln!(out, "  {:>20}  {:>20}", sig12(re.0), sig12(im.0));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sidigraph_core::{Arc, Sign};

    #[test]
    fn significant_digits() {
        assert_eq!(sig12(4.0), "4");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(-0.0), "0");
        assert_eq!(sig12(2.0f64.sqrt() * 2.0), "2.82842712475");
        assert_eq!(sig12(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig12(-1234.5), "-1234.5");
        assert_eq!(sig12(1e-7), "1e-7");
        assert_eq!(sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig12(f64::NAN), "null");
    }

    #[test]
    fn digon_report() {
        let s = Sidigraph::new(2, [Arc::positive(0, 1), Arc::new(1, 0, Sign::Negative)]).unwrap();
        let r = analyze("digon", &s, DEFAULT_TOL_CLASS).unwrap();
        assert_eq!(r.charpoly, ["1", "0", "1"]);
        assert_eq!(r.charpoly_text(), "z^2 + 1");
        assert_eq!(r.energy.0, 0.0);
        assert!(r.flags.in_delta2 && !r.flags.in_delta1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["energy"], serde_json::json!(0));
        assert_eq!(json["charpoly"], serde_json::json!(["1", "0", "1"]));
        let text = r.to_json();
        let positions: Vec<usize> = [
            "input_name",
            "n",
            "arc_count",
            "charpoly",
            "spectrum",
            "energy",
            "flags",
            "spectrum_class",
        ]
        .iter()
        .map(|k| text.find(&format!("\"{k}\":")).unwrap())
        .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }
}
