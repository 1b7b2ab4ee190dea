//! Reference tables regenerated from scratch and compared with golden files.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use similar::TextDiff;

use super::{Outcome, UsageError};
use crate::geometry::verify_table_data;
use crate::vertices::tables::{render_catalog, render_rational_case, render_seed_table, MAX_F};
use crate::vertices::Profile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    T5,
    T7,
    T8,
    T9,
    T10,
    Geom,
}

impl TableName {
    pub fn file_name(self) -> Option<&'static str> {
        match self {
            TableName::T5 => Some("t5.txt"),
            TableName::T7 => Some("t7.txt"),
            TableName::T8 => Some("t8.txt"),
            TableName::T9 => Some("t9.txt"),
            TableName::T10 => Some("t10.txt"),
            TableName::Geom => None,
        }
    }

    /// The table as derived by the library.
    pub fn render(self) -> String {
        let seeds = |d| render_seed_table(d, Profile::ORDERED).expect("table seeds are valid");
        match self {
            TableName::T5 => render_catalog(),
            TableName::T7 => seeds(3),
            TableName::T8 => seeds(4),
            TableName::T9 => seeds(5),
            TableName::T10 => render_rational_case(MAX_F),
            TableName::Geom => verify_table_data().to_string(),
        }
    }
}

/// `SPHERETILE_GOLDEN_DIR`, or the `golden` directory of this crate.
pub fn golden_dir() -> PathBuf {
    std::env::var_os("SPHERETILE_GOLDEN_DIR").map(PathBuf::from).unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("golden"))
}

pub fn unified_diff(golden: &str, fresh: &str, name: &str) -> String {
    TextDiff::from_lines(golden, fresh).unified_diff().context_radius(2).header(&format!("golden/{name}"), "regenerated").to_string()
}

pub(super) fn cmd_tables(which: TableName, bless: bool, dir: &Path) -> Result<Outcome, UsageError> {
    let Some(name) = which.file_name() else {
        let report = verify_table_data();
        let mut out = report.to_string();
        out.push_str(&format!("{} of {} checks within tolerance\n", report.checks.len() - report.failures().len(), report.checks.len()));
        return Ok(Outcome::checked(out, report.pass()));
    };
    let fresh = which.render();
    let path = dir.join(name);
    if bless {
        std::fs::create_dir_all(dir)?;
        std::fs::write(&path, &fresh).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        return Ok(Outcome::ok(format!("wrote {}\n", path.display())));
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    if golden == fresh {
        return Ok(Outcome::ok(fresh));
    }
    Ok(Outcome {
        stdout: unified_diff(&golden, &fresh, name),
        stderr: format!("{name}: regenerated table differs from golden\n"),
        pass: false,
    })
}
