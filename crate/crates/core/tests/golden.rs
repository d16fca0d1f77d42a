use std::fs;
use std::path::PathBuf;

use l1modal::l1::enumerate_theorems;

// Every L1 theorem over a, b of size at most 7, in canonical order.
#[test]
fn theorems_over_two_names_up_to_size_seven() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/theorems_2_7.txt");
    let expected = fs::read_to_string(path).unwrap();
    let expected: Vec<&str> = expected.lines().collect();
    let actual: Vec<String> = enumerate_theorems(2, 7).unwrap().map(|f| f.to_string()).collect();
    assert_eq!(actual.len(), expected.len());
    for (i, (a, e)) in actual.iter().zip(&expected).enumerate() {
        assert_eq!(a, e, "line {}", i + 1);
    }
}

#[test]
fn enumeration_is_a_prefix_of_larger_bounds() {
    let small: Vec<String> = enumerate_theorems(2, 5).unwrap().map(|f| f.to_string()).collect();
    let large: Vec<String> = enumerate_theorems(2, 6).unwrap().take(small.len()).map(|f| f.to_string()).collect();
    assert_eq!(small, large);
}
