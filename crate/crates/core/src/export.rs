//! Plain-text export of the crate's data products.
//!
//! All numbers are emitted with 17 significant digits (`{:.16e}`), '.'
//! decimal separator, no locale; CSV always carries a header row. Output is
//! byte-stable for fixed inputs.

use crate::boundary::BoundarySample;
use crate::invariants::InvariantTensors;
use crate::linalg::Complex;
use crate::representation::ProbVector;
use crate::rotation::RotationMatrix9;
use crate::sic::SicEnsemble;

/// One float, 17 significant digits.
pub fn fmt_g(x: f64) -> String {
    format!("{x:.16e}")
}

fn complex_pair(z: Complex) -> String {
    format!("[{},{}]", fmt_g(z.re), fmt_g(z.im))
}

/// Ensemble as JSON: selector, canonical-range flag, fiducial, and the nine
/// row-major 3×3 projectors; every complex entry is a `[re, im]` pair.
pub fn ensemble_json(sic: &SicEnsemble) -> String {
    let mut out = String::with_capacity(4096);
    out.push_str("{\n  \"spec\": {\"selector\": \"");
    out.push_str(&sic.spec().to_string());
    out.push_str("\", \"canonical_range\": ");
    out.push_str(if sic.spec().canonical_range() {
        "true"
    } else {
        "false"
    });
    out.push_str("},\n  \"fiducial\": [");
    let fiducial = sic.fiducial();
    for (i, z) in fiducial.v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&complex_pair(*z));
    }
    out.push_str("],\n  \"projectors\": [\n");
    for (idx, pi) in sic.projectors().iter().enumerate() {
        out.push_str("    [");
        for (r, row) in pi.m.iter().enumerate() {
            if r > 0 {
                out.push_str(", ");
            }
            out.push('[');
            for (c, z) in row.iter().enumerate() {
                if c > 0 {
                    out.push_str(", ");
                }
                out.push_str(&complex_pair(*z));
            }
            out.push(']');
        }
        out.push(']');
        if idx < 8 {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}

/// Tensors as JSON: dense 729-entry arrays in label order with the last
/// index fastest; `t` and `s` as `[re, im]` pairs, `s_real` as plain floats.
pub fn tensors_json(inv: &InvariantTensors) -> String {
    let mut out = String::with_capacity(729 * 64);
    let mut push_complex_tensor = |out: &mut String, name: &str, get: &dyn Fn(usize, usize, usize) -> Complex| {
        out.push_str("  \"");
        out.push_str(name);
        out.push_str("\": [");
        let mut first = true;
        for i in 1..=9 {
            for j in 1..=9 {
                for k in 1..=9 {
                    if !first {
                        out.push_str(", ");
                    }
                    first = false;
                    out.push_str(&complex_pair(get(i, j, k)));
                }
            }
        }
        out.push(']');
    };
    out.push_str("{\n");
    push_complex_tensor(&mut out, "t", &|i, j, k| inv.t(i, j, k));
    out.push_str(",\n");
    push_complex_tensor(&mut out, "s", &|i, j, k| inv.s(i, j, k));
    out.push_str(",\n  \"s_real\": [");
    let mut first = true;
    for i in 1..=9 {
        for j in 1..=9 {
            for k in 1..=9 {
                if !first {
                    out.push_str(", ");
                }
                first = false;
                out.push_str(&fmt_g(inv.s_real(i, j, k)));
            }
        }
    }
    out.push_str("]\n}\n");
    out
}

/// Probability vector as a one-row CSV with header `p1..p9`.
pub fn prob_csv(p: &ProbVector) -> String {
    let mut out = String::from("p1,p2,p3,p4,p5,p6,p7,p8,p9\n");
    let row: Vec<String> = p.as_array().iter().map(|v| fmt_g(*v)).collect();
    out.push_str(&row.join(","));
    out.push('\n');
    out
}

/// Probability vector as JSON.
pub fn prob_json(p: &ProbVector) -> String {
    let row: Vec<String> = p.as_array().iter().map(|v| fmt_g(*v)).collect();
    format!("{{\"p\": [{}]}}\n", row.join(", "))
}

/// 9×9 rotation as CSV with header `c1..c9`.
pub fn rotation_csv(r: &RotationMatrix9) -> String {
    let mut out = String::from("c1,c2,c3,c4,c5,c6,c7,c8,c9\n");
    for row in &r.entries().m {
        let cells: Vec<String> = row.iter().map(|v| fmt_g(*v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

/// 9×9 rotation as JSON with its endpoint selectors.
pub fn rotation_json(r: &RotationMatrix9) -> String {
    let mut out = String::with_capacity(2048);
    out.push_str("{\n  \"from\": \"");
    out.push_str(&r.from_spec().to_string());
    out.push_str("\",\n  \"to\": \"");
    out.push_str(&r.to_spec().to_string());
    out.push_str("\",\n  \"entries\": [\n");
    for (i, row) in r.entries().m.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| fmt_g(*v)).collect();
        out.push_str("    [");
        out.push_str(&cells.join(", "));
        out.push(']');
        if i < 8 {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("  ]\n}\n");
    out
}

/// Invariant table `(t, x, y, z)` as CSV.
pub fn invariant_table_csv(rows: &[(f64, f64, f64, f64)]) -> String {
    let mut out = String::from("t,x,y,z\n");
    for (t, x, y, z) in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            fmt_g(*t),
            fmt_g(*x),
            fmt_g(*y),
            fmt_g(*z)
        ));
    }
    out
}

/// Invariant table as JSON rows.
pub fn invariant_table_json(rows: &[(f64, f64, f64, f64)]) -> String {
    let mut out = String::from("{\"rows\": [\n");
    for (i, (t, x, y, z)) in rows.iter().enumerate() {
        out.push_str(&format!(
            "  {{\"t\": {}, \"x\": {}, \"y\": {}, \"z\": {}}}",
            fmt_g(*t),
            fmt_g(*x),
            fmt_g(*y),
            fmt_g(*z)
        ));
        if i + 1 < rows.len() {
            out.push(',');
        }
        out.push('\n');
    }
    out.push_str("]}\n");
    out
}

/// Two-column CSV with caller-supplied header (e.g. `alpha,F` or `F,r`).
pub fn two_column_csv(header: &str, rows: &[(f64, f64)]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for (a, b) in rows {
        out.push_str(&format!("{},{}\n", fmt_g(*a), fmt_g(*b)));
    }
    out
}

/// Boundary samples as CSV: direction components, functional, radius, class.
pub fn boundary_samples_csv(samples: &[BoundarySample]) -> String {
    let mut out = String::from("n1,n2,n3,n4,n5,n6,n7,n8,n9,F,r,class\n");
    for s in samples {
        let dir: Vec<String> = s.n.iter().map(|v| fmt_g(*v)).collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            dir.join(","),
            fmt_g(s.f),
            fmt_g(s.r),
            s.class
        ));
    }
    out
}
