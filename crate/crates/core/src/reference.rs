//! Known values used to check computed results.

use crate::reduced::BigCount;

/// Number of commutation classes of the longest element of `S_n`, for `n = 1..=10`.
pub const KNOWN_CLASS_COUNTS: [&str; 10] =
    ["1", "1", "2", "8", "62", "908", "24698", "1232944", "112018190", "18410581880"];

/// The eight commutation classes of the longest element of `S_4`, each
/// in a fixed reference order.
pub const S4_CLASSES: [&[&str]; 8] = [
    &["321323", "323123"],
    &["312312", "132312", "312132", "132132"],
    &["321232"],
    &["232123"],
    &["123121", "121321"],
    &["231231", "213231", "231213", "213213"],
    &["123212"],
    &["212321"],
];

pub fn known_class_count(n: usize) -> Option<BigCount> {
    let idx = n.checked_sub(1)?;
    KNOWN_CLASS_COUNTS.get(idx).map(|s| s.parse().expect("reference table holds decimal literals"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup() {
        assert_eq!(known_class_count(0), None);
        assert_eq!(known_class_count(4), Some(BigCount::from(8u32)));
        assert_eq!(known_class_count(10).unwrap().to_string(), "18410581880");
        assert_eq!(known_class_count(11), None);
    }

    #[test]
    fn s4_table_has_sixteen_words() {
        let mut all: Vec<&str> = S4_CLASSES.iter().flat_map(|c| c.iter().copied()).collect();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 16);
    }
}
