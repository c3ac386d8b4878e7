//! Plain, LaTeX and CSV renderings. Every format carries the same exact
//! values as the JSON record.

use rayleigh::{Family, SumsTable, Value};

use crate::record::{number, OutputRecord};

fn symbol(family: &Family) -> (&'static str, &'static str) {
    match family {
        Family::Sigma => ("sigma", "\\sigma"),
        Family::Tau { .. } => ("tau", "\\tau"),
        Family::Chf { .. } => ("S", "S"),
    }
}

fn header(record: &OutputRecord) -> Vec<String> {
    let mut lines = vec![format!("family: {}", record.family)];
    if !record.params.is_empty() {
        let params: Vec<String> = record.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        lines.push(format!("params: {}", params.join(", ")));
    }
    if let Some(nu) = &record.nu {
        lines.push(format!("nu: {nu}"));
    }
    lines.push(format!("provenance: {}", record.provenance));
    if let Some(c) = &record.caveat {
        lines.push(format!("caveat: {c}"));
    }
    lines
}

fn fixed_or_symbolic(v: &Value, decimal: Option<usize>) -> String {
    match v {
        Value::Fixed(x) => number(x, decimal),
        Value::Symbolic(r) => r.to_string(),
    }
}

pub fn plain(table: &SumsTable, record: &OutputRecord, decimal: Option<usize>) -> String {
    let (name, _) = symbol(&table.family);
    let mut lines = header(record);
    for (n, v) in table.indexed() {
        lines.push(format!("{name}_{n} = {}", fixed_or_symbolic(v, decimal)));
    }
    if let Some(brackets) = &record.brackets {
        for b in brackets {
            lines.push(format!(
                "n = {}: lower in [{}, {}], upper = {}",
                b.n, b.lower_lo, b.lower_hi, b.upper
            ));
        }
    }
    lines.join("\n") + "\n"
}

pub fn latex(table: &SumsTable, decimal: Option<usize>) -> String {
    let (_, sym) = symbol(&table.family);
    let rows: Vec<String> = table
        .indexed()
        .map(|(n, v)| {
            let body = match (v, decimal) {
                (Value::Fixed(x), Some(d)) => rayleigh::arith::to_decimal(x, d),
                _ => v.to_latex(),
            };
            format!("{sym}_{{{n}}} &= {body}")
        })
        .collect();
    format!("\\begin{{align*}}\n{}\n\\end{{align*}}\n", rows.join(" \\\\\n"))
}

pub fn csv(table: &SumsTable, decimal: Option<usize>) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "value"])?;
    for (n, v) in table.indexed() {
        w.write_record([n.to_string(), fixed_or_symbolic(v, decimal)])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
