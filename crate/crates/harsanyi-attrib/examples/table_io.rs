//! Load and save value tables: canonical JSON and mask,value CSV.
//!
//! The JSON form is `{"n": …, "values": […], "labels": […]}` with the values
//! in mask order; serialization is canonical (fixed float rendering, fixed
//! key order), so equal tables produce byte-identical files. CSV rows are
//! `mask,value` pairs in any order, with an optional header and an optional
//! explicit variable count. Run with:
//!
//! ```text
//! cargo run --example table_io
//! ```

use harsanyi_attrib::{Error, Result, TableFormat, ValueTable, DEFAULT_N_CAP};

fn main() -> Result<()> {
    // JSON round trip: write the canonical form, read it back unchanged.
    let table = ValueTable::new(
        harsanyi_attrib::LatticeVector::from_vec(2, vec![0.0, 1.0, 1.0, 3.0])?,
        Some(vec!["rain".into(), "sprinkler".into()]),
    )?;
    let text = table.to_json_string();
    print!("canonical JSON:\n  {text}");
    let reloaded = ValueTable::from_json_str(&text, DEFAULT_N_CAP)?;
    assert_eq!(reloaded.values().as_slice(), table.values().as_slice());
    assert_eq!(reloaded.label(1), "sprinkler");
    println!("  -> reloads exactly, labels preserved\n");

    // CSV with a header row and shuffled masks; the variable count is
    // inferred from the largest mask present.
    let csv = "mask,value\n3,3.0\n0,0.0\n2,1.0\n1,1.0\n";
    let from_csv = ValueTable::from_csv_str(csv, None, DEFAULT_N_CAP)?;
    println!(
        "CSV with header, shuffled rows -> n inferred as {}, values {:?}",
        from_csv.n(),
        from_csv.values().as_slice()
    );

    // The same rows load against an explicit larger variable count too;
    // that's the `--n` flag of the command-line interface.
    let csv_short = "0,0.0\n1,1.0\n2,1.0\n3,3.0\n4,0.5\n5,1.5\n6,1.5\n7,3.5\n";
    let padded = ValueTable::from_csv_str(csv_short, Some(3), DEFAULT_N_CAP)?;
    println!("headerless CSV with --n 3 -> n = {}\n", padded.n());

    // Malformed inputs are rejected with a specific error, not a panic.
    let bad_cases: [(&str, &str); 3] = [
        ("duplicate mask", "0,0.0\n1,1.0\n1,2.0\n2,1.0\n3,3.0\n"),
        ("missing mask", "0,0.0\n3,3.0\n"),
        ("non-finite value", "0,0.0\n1,inf\n2,1.0\n3,3.0\n"),
    ];
    println!("rejected inputs:");
    for (what, text) in bad_cases {
        match ValueTable::from_csv_str(text, None, DEFAULT_N_CAP) {
            Err(err) => println!("  {what}: {err}"),
            Ok(_) => unreachable!("{what} should fail"),
        }
    }

    // Reading from any io::Read with an explicit format works the same way;
    // this is what the command-line interface does under the hood.
    let via_reader = ValueTable::load(
        std::io::Cursor::new(text.as_bytes()),
        TableFormat::Json,
        None,
        DEFAULT_N_CAP,
    )?;
    assert_eq!(via_reader.n(), 2);

    // The cap guards against accidentally materializing 2^n values for huge
    // n; it can be raised per run when the memory is really intended.
    let bad = ValueTable::from_csv_str("0,0.0\n1,1.0\n", None, 0);
    match bad {
        Err(Error::CapExceeded { n, cap }) => {
            println!("\ncap demo: n = {n} rejected under cap {cap} (raise via HARSANYI_N_CAP)")
        }
        other => unreachable!("expected a cap error, got {other:?}"),
    }
    Ok(())
}
