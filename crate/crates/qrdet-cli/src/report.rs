//! Report serialization: canonical JSONL and a flattened CSV convenience
//! form.
//!
//! JSONL schema, one object per line:
//!
//! ```json
//! {"theorem":"THM13","params":{"c":"1","d":"1","p":"5"},"status":"PASS",
//!  "witness":{"det_mod_p":"3","formula":"-1","prediction":"-1","symbol":"-1"},
//!  "elapsed_us":0}
//! ```
//!
//! `params` and `witness` values are decimal strings — witnesses routinely
//! exceed every native number range — with keys sorted. Sweep reports fix
//! `elapsed_us` to 0 so that identical sweeps are byte-identical whatever
//! the worker count; single-check output keeps the measured value.
//!
//! CSV flattens `params`/`witness` under dotted headers. It is a lossy
//! convenience: the column set is the union over the whole report, missing
//! cells stay empty.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use qrdet::verify::VerificationRecord;

#[derive(Serialize)]
struct JsonRecord<'a> {
    theorem: &'a str,
    params: BTreeMap<&'a str, String>,
    status: &'a str,
    witness: BTreeMap<&'a str, String>,
    elapsed_us: u64,
}

fn string_maps(
    record: &VerificationRecord,
) -> (BTreeMap<&'static str, String>, BTreeMap<&'static str, String>) {
    let params = record
        .params
        .iter()
        .map(|(&k, v)| (k, v.to_string()))
        .collect();
    let witness = record
        .witness
        .iter()
        .map(|(&k, v)| (k, v.to_string()))
        .collect();
    (params, witness)
}

/// The canonical one-line JSON form of a record. `timed` controls whether
/// the measured `elapsed_us` is kept (single checks) or zeroed (reports).
pub fn record_json(record: &VerificationRecord, timed: bool) -> String {
    let (params, witness) = string_maps(record);
    let row = JsonRecord {
        theorem: record.theorem.as_str(),
        params,
        status: record.status.as_str(),
        witness,
        elapsed_us: if timed {
            record.elapsed.as_micros() as u64
        } else {
            0
        },
    };
    serde_json::to_string(&row).expect("record serialization cannot fail")
}

/// Destination for sweep records; `finish` flushes buffered formats.
pub trait RecordSink {
    fn write(&mut self, record: &VerificationRecord) -> io::Result<()>;
    fn finish(&mut self) -> io::Result<()>;
}

/// Streams JSONL, one record per line, in arrival (= canonical) order.
pub struct JsonlSink<W: Write> {
    out: W,
}

impl<W: Write> JsonlSink<W> {
    pub fn new(out: W) -> Self {
        JsonlSink { out }
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

impl<W: Write> RecordSink for JsonlSink<W> {
    fn write(&mut self, record: &VerificationRecord) -> io::Result<()> {
        self.out.write_all(record_json(record, false).as_bytes())?;
        self.out.write_all(b"\n")
    }

    fn finish(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}

type CsvRow = (
    &'static str,
    BTreeMap<&'static str, String>,
    &'static str,
    BTreeMap<&'static str, String>,
);

/// Buffers the whole report, then writes CSV with dotted headers:
/// `theorem,params.<key>…,status,witness.<key>…,elapsed_us`.
pub struct CsvSink<W: Write> {
    out: W,
    rows: Vec<CsvRow>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(out: W) -> Self {
        CsvSink { out, rows: Vec::new() }
    }
}

impl<W: Write> RecordSink for CsvSink<W> {
    fn write(&mut self, record: &VerificationRecord) -> io::Result<()> {
        let (params, witness) = string_maps(record);
        self.rows
            .push((record.theorem.as_str(), params, record.status.as_str(), witness));
        Ok(())
    }

    fn finish(&mut self) -> io::Result<()> {
        let mut param_keys: Vec<&str> = Vec::new();
        let mut witness_keys: Vec<&str> = Vec::new();
        for (_, params, _, witness) in &self.rows {
            for &k in params.keys() {
                if !param_keys.contains(&k) {
                    param_keys.push(k);
                }
            }
            for &k in witness.keys() {
                if !witness_keys.contains(&k) {
                    witness_keys.push(k);
                }
            }
        }
        param_keys.sort_unstable();
        witness_keys.sort_unstable();

        let mut header = vec!["theorem".to_string()];
        header.extend(param_keys.iter().map(|k| format!("params.{k}")));
        header.push("status".to_string());
        header.extend(witness_keys.iter().map(|k| format!("witness.{k}")));
        header.push("elapsed_us".to_string());
        writeln!(self.out, "{}", header.join(","))?;

        for (theorem, params, status, witness) in &self.rows {
            let mut fields = vec![theorem.to_string()];
            fields.extend(
                param_keys
                    .iter()
                    .map(|&k| params.get(k).cloned().unwrap_or_default()),
            );
            fields.push(status.to_string());
            fields.extend(
                witness_keys
                    .iter()
                    .map(|&k| witness.get(k).cloned().unwrap_or_default()),
            );
            fields.push("0".to_string());
            writeln!(self.out, "{}", fields.join(","))?;
        }
        self.out.flush()
    }
}

/// Collects records in memory; used by the self-test and unit tests.
#[derive(Default)]
pub struct VecSink {
    pub records: Vec<VerificationRecord>,
}

impl RecordSink for VecSink {
    fn write(&mut self, record: &VerificationRecord) -> io::Result<()> {
        self.records.push(record.clone());
        Ok(())
    }

    fn finish(&mut self) -> io::Result<()> {
        Ok(())
    }
}

/// Discards records; sweeps that only need the summary counts use this.
#[derive(Default)]
pub struct NullSink;

impl RecordSink for NullSink {
    fn write(&mut self, _record: &VerificationRecord) -> io::Result<()> {
        Ok(())
    }

    fn finish(&mut self) -> io::Result<()> {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qrdet::verify::check_thm13;

    #[test]
    fn json_shape_is_stable() {
        let record = check_thm13(5, 1, 1).unwrap();
        let line = record_json(&record, false);
        assert_eq!(
            line,
            r#"{"theorem":"THM13","params":{"c":"1","d":"1","p":"5"},"status":"PASS","witness":{"det_mod_p":"3","formula":"-1","prediction":"-1","symbol":"-1"},"elapsed_us":0}"#
        );
        // timed form differs only in elapsed_us
        let timed = record_json(&record, true);
        assert!(timed.starts_with(r#"{"theorem":"THM13","params":{"c":"1","d":"1","p":"5"}"#));
    }

    #[test]
    fn jsonl_lines_parse_back_with_exact_schema() {
        let record = check_thm13(7, 2, 3).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&record_json(&record, false)).unwrap();
        let object = value.as_object().unwrap();
        // parsed maps are key-sorted; emission order is pinned elsewhere
        let keys: Vec<&str> = object.keys().map(String::as_str).collect();
        assert_eq!(keys, ["elapsed_us", "params", "status", "theorem", "witness"]);
        assert!(object["params"].as_object().unwrap().values().all(|v| v.is_string()));
        assert!(object["witness"].as_object().unwrap().values().all(|v| v.is_string()));
        assert!(object["elapsed_us"].is_u64());
    }

    #[test]
    fn csv_unions_keys_and_pads() {
        let mut sink = CsvSink::new(Vec::new());
        sink.write(&check_thm13(5, 1, 1).unwrap()).unwrap();
        sink.write(&check_thm13(5, 10, 1).unwrap()).unwrap(); // SKIP, no witness
        sink.finish().unwrap();
        let text = String::from_utf8(sink.out).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "theorem,params.c,params.d,params.p,status,witness.det_mod_p,witness.formula,witness.prediction,witness.symbol,elapsed_us"
        );
        assert_eq!(lines.next().unwrap(), "THM13,1,1,5,PASS,3,-1,-1,-1,0");
        assert_eq!(lines.next().unwrap(), "THM13,10,1,5,SKIP,,,,,0");
        assert!(lines.next().is_none());
    }
}
