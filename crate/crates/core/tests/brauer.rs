use std::fs;
use std::path::PathBuf;

use feasichar::brauer::{parse_table, parse_table_unchecked, serialize_table, validate};
use feasichar::cyclotomic::CyclotomicNumber;
use feasichar::error::Error;

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data")
}

fn bundled() -> Vec<(String, String)> {
    let mut out: Vec<_> = fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "bct"))
        .map(|p| (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

fn alt5() -> String {
    fs::read_to_string(data_dir().join("a5_p0.bct")).unwrap()
}

fn violations_after(edit: impl Fn(&str) -> String) -> Vec<String> {
    let text = edit(&alt5());
    validate(&parse_table_unchecked(&text).unwrap())
}

#[test]
fn bundled_tables_round_trip_byte_for_byte() {
    let all = bundled();
    assert!(all.len() >= 10);
    for (name, text) in &all {
        let t = parse_table(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(&serialize_table(&t), text, "{name}");
        assert_eq!(parse_table(&serialize_table(&t)).unwrap(), t);
    }
}

#[test]
fn bundled_tables_are_sound() {
    for (name, text) in bundled() {
        let t = parse_table(&text).unwrap();
        let e = t.identity_index().unwrap();
        assert!(t.trivial_index().is_some(), "{name}");
        let p = t.p;
        for chi in &t.irreducibles {
            assert_eq!(chi.values[e], CyclotomicNumber::integer(chi.degree as i64));
        }
        for c in &t.classes {
            assert!(p <= 1 || !(c.order as u64).is_multiple_of(p), "{name} {}", c.label);
            assert_eq!(t.exponent % c.order as u64, 0);
        }
    }
}

#[test]
fn alt5_details() {
    let t = parse_table(&alt5()).unwrap();
    assert_eq!((t.name.as_str(), t.p, t.exponent), ("Alt5", 0, 30));
    assert_eq!(t.classes.len(), 5);
    assert_eq!(t.max_class_order(), 5);
    let a = t.class_index("5A").unwrap();
    assert_eq!(t.power_index(a, 2), t.class_index("5B"));
    assert_eq!(t.power_index(a, 5), t.class_index("1A"));
    assert_eq!(t.power_index(a, 4), Some(a));
    assert_eq!(t.dual_index(t.irr_index("3a").unwrap()), t.irr_index("3a").unwrap());
    let perms = t.outer_permutations().unwrap();
    assert_eq!(perms.len(), 1);
    assert_eq!(perms[0].0[a], t.class_index("5B").unwrap());
    assert!(t.comments[0].1.starts_with('#'));
}

#[test]
fn parse_errors_carry_line_numbers() {
    let cases = [
        ("group A p 0 exponent 2\nclass 1A order x\n", 2),
        ("group A p 0 exponent 2\nclass 1A order 1\nirr 1 deg 1 ind 1 dual 1 h1 0 vals 1;z\n", 3),
        ("nonsense here\n", 1),
        ("group A p 0 exponent 2\nclass 1A order 1\n\n# fine\nwhatever 3\n", 5),
        ("group A p 0 exponent 2\nclass 1A order 1\nout classes (1A irrs ()\n", 3),
    ];
    for (text, line) in cases {
        match parse_table_unchecked(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: expected a parse error, got {other:?}"),
        }
    }
}

#[test]
fn corruptions_are_reported() {
    let v = violations_after(|s| s.replace("class 2A order 2 pow 2:1A", "class 2A order 2 pow 2:3A"));
    assert!(v.iter().any(|m| m.contains("power map")), "{v:?}");

    let v = violations_after(|s| s.replace("irr 4 deg 4", "irr 4 deg 5"));
    assert!(v.iter().any(|m| m.starts_with("identity-degree")), "{v:?}");

    let v = violations_after(|s| s.replace("vals 5;1;-1;0;0", "vals 5;1;-1;0;z7"));
    assert!(v.iter().any(|m| m.starts_with("value field")), "{v:?}");

    let v = violations_after(|s| s.replace("irr 4 deg 4 ind 1", "irr 4 deg 4 ind 0"));
    assert!(v.iter().any(|m| m.starts_with("indicator")), "{v:?}");

    let v = violations_after(|s| s.replace("group Alt5 p 0", "group Alt5 p 5"));
    assert!(v.iter().any(|m| m.starts_with("p-regularity")), "{v:?}");

    let v = violations_after(|s| s.replace("exponent 30", "exponent 20"));
    assert!(v.iter().any(|m| m.starts_with("exponent")), "{v:?}");

    let v = violations_after(|s| s.replace("dual 3b h1", "dual 3a h1"));
    assert!(v.iter().any(|m| m.starts_with("dual")), "{v:?}");

    let v = violations_after(|s| s.replace("vals 4;0;1;-1;-1", "vals 4;0;1;-1"));
    assert!(v.iter().any(|m| m.contains("4 values for 5 classes")), "{v:?}");

    let v = violations_after(|s| s.replace("out classes (5A 5B) irrs (3a 3b)", "out classes (5A 5B) irrs ()"));
    assert!(v.iter().any(|m| m.starts_with("outer action")), "{v:?}");

    match parse_table(&alt5().replace("irr 4 deg 4", "irr 4 deg 5")) {
        Err(Error::Invalid { name, violations }) => {
            assert_eq!(name, "Alt5");
            assert_eq!(violations.len(), 1);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn comments_survive_edits() {
    let text = format!("{}# trailing remark\n", alt5());
    let t = parse_table(&text).unwrap();
    assert_eq!(serialize_table(&t), text);
}
