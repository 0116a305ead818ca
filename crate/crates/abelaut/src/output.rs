//! Result records and their text, JSON-lines and CSV renderings.
//!
//! Big integers are written as decimal strings in every format, so nothing is
//! ever rounded.

use std::io::Write;

use abelaut_core::{aut_order, classify, ratio, GroupShape};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One group with its exact invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub order: String,
    pub group: String,
    pub aut_order: String,
    pub ratio_num: String,
    pub ratio_den: String,
    pub class: String,
}

impl Record {
    pub fn for_group(group: &GroupShape) -> Self {
        let r = ratio(group);
        Record {
            order: group.order().to_string(),
            group: group.to_string(),
            aut_order: aut_order(group).to_string(),
            ratio_num: r.numer().to_string(),
            ratio_den: r.denom().to_string(),
            class: class_tags(group),
        }
    }

    pub fn ratio_text(&self) -> String {
        if self.ratio_den == "1" {
            self.ratio_num.clone()
        } else {
            format!("{}/{}", self.ratio_num, self.ratio_den)
        }
    }
}

/// `2:Cyclic;3:ZpTimesHigher(2)`, or `trivial`.
pub fn class_tags(group: &GroupShape) -> String {
    if group.is_trivial() {
        return "trivial".to_string();
    }
    group
        .factors()
        .map(|f| format!("{}:{}", f.prime(), classify(f)))
        .collect::<Vec<_>>()
        .join(";")
}

/// Writes a stream of serializable rows in the chosen format. Text rows are
/// produced by `text`.
pub struct RowWriter<'a, W: Write> {
    format: Format,
    out: &'a mut W,
    wrote_header: bool,
}

impl<'a, W: Write> RowWriter<'a, W> {
    pub fn new(format: Format, out: &'a mut W) -> Self {
        RowWriter { format, out, wrote_header: false }
    }

    pub fn write<T: Serialize>(&mut self, row: &T, text: impl FnOnce(&T) -> String) -> crate::Result<()> {
        match self.format {
            Format::Text => writeln!(self.out, "{}", text(row))?,
            Format::Json => {
                serde_json::to_writer(&mut *self.out, row)?;
                writeln!(self.out)?;
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .has_headers(!self.wrote_header)
                    .from_writer(&mut *self.out);
                w.serialize(row)?;
                w.flush()?;
                self.wrote_header = true;
            }
        }
        Ok(())
    }
}
