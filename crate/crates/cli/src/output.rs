//! CSV emission and parsing. Floats print through `Display`, i.e. the
//! shortest decimal that round-trips, so re-parsing an emitted file
//! reproduces the rows bit-exactly.

use std::io::{self, Write};

use crate::engine::TraceRow;

pub const CSV_HEADER: &str = "t,f14,f23,gamma,omega,s_cond,holevo_gap,eub_adabi,eub_berta,lhs";

pub fn write_csv<W: Write>(mut w: W, rows: &[TraceRow]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            r.t,
            r.f14,
            r.f23,
            r.gamma_c,
            r.omega_c,
            r.s_cond,
            r.holevo_gap,
            r.eub_adabi,
            r.eub_berta,
            r.lhs
        )?;
    }
    Ok(())
}

pub fn csv_string(rows: &[TraceRow]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("CSV output is ASCII")
}

/// Parse a file produced by [`write_csv`]; used to close the round-trip loop.
pub fn parse_csv(text: &str) -> Result<Vec<TraceRow>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => return Err(format!("bad header: {other:?}")),
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<f64> = line
            .split(',')
            .map(|f| f.parse().map_err(|e| format!("row {}: {e}", i + 1)))
            .collect::<Result<_, _>>()?;
        if fields.len() != 10 {
            return Err(format!("row {}: expected 10 fields, got {}", i + 1, fields.len()));
        }
        rows.push(TraceRow {
            t: fields[0],
            f14: fields[1],
            f23: fields[2],
            gamma_c: fields[3],
            omega_c: fields[4],
            s_cond: fields[5],
            holevo_gap: fields[6],
            eub_adabi: fields[7],
            eub_berta: fields[8],
            lhs: fields[9],
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::ScenarioConfig;
    use crate::engine::run_trace;

    #[test]
    fn round_trip_is_bit_exact() {
        let cfg = ScenarioConfig::from_json(
            r#"{"chain": {"N": 41}, "t_end": 4.0, "t_steps": 17}"#,
        )
        .unwrap();
        let rows = run_trace(&cfg).unwrap();
        let text = csv_string(&rows);
        let parsed = parse_csv(&text).unwrap();
        assert_eq!(parsed.len(), rows.len());
        for (a, b) in rows.iter().zip(&parsed) {
            assert_eq!(a.t.to_bits(), b.t.to_bits());
            assert_eq!(a.f14.to_bits(), b.f14.to_bits());
            assert_eq!(a.f23.to_bits(), b.f23.to_bits());
            assert_eq!(a.gamma_c.to_bits(), b.gamma_c.to_bits());
            assert_eq!(a.omega_c.to_bits(), b.omega_c.to_bits());
            assert_eq!(a.s_cond.to_bits(), b.s_cond.to_bits());
            assert_eq!(a.holevo_gap.to_bits(), b.holevo_gap.to_bits());
            assert_eq!(a.eub_adabi.to_bits(), b.eub_adabi.to_bits());
            assert_eq!(a.eub_berta.to_bits(), b.eub_berta.to_bits());
            assert_eq!(a.lhs.to_bits(), b.lhs.to_bits());
        }
    }

    #[test]
    fn header_is_pinned() {
        let text = csv_string(&[]);
        assert_eq!(text, format!("{CSV_HEADER}\n"));
        assert!(parse_csv("t,wrong\n").is_err());
    }
}
