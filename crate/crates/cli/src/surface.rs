//! CSV export of a conflict sweep.

use std::io::{self, Write};

use gds_core::SweepCell;

pub const CSV_HEADER: &str = "x,y,feasible,k_magnitude";

/// Writes one row per cell; `k_magnitude` is left empty where infeasible.
pub fn write_csv<W: Write>(cells: &[SweepCell], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for cell in cells {
        write!(
            w,
            "{},{},{},",
            fixed6(cell.x),
            fixed6(cell.y),
            cell.feasible()
        )?;
        match cell.k_magnitude {
            Some(k) => writeln!(w, "{}", fixed6(k))?,
            None => writeln!(w)?,
        }
    }
    w.flush()
}

fn fixed6(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}
