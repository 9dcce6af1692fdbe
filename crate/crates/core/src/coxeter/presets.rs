use alloc::vec;
use alloc::vec::Vec;

use super::{CoxeterSystem, INFINITY};

pub const PRESET_NAMES: &[&str] = &["A1", "A2", "A3", "B2", "B3", "G2", "A1xA1", "affineA1"];

/// Named systems. Non-simply-laced presets use the Cartan matrices of the
/// corresponding root systems; `affineA1` is the infinite dihedral group with
/// `a_12 = a_21 = -2`.
pub fn preset(name: &str) -> Option<CoxeterSystem> {
    let (orders, cartan): (Vec<Vec<u32>>, Option<Vec<Vec<i64>>>) = match name {
        "A1" => (vec![vec![1]], None),
        "A2" => (vec![vec![1, 3], vec![3, 1]], None),
        "A3" => (vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]], None),
        "B2" => (vec![vec![1, 4], vec![4, 1]], Some(vec![vec![2, -1], vec![-2, 2]])),
        "B3" => (
            vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]],
            Some(vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]),
        ),
        "G2" => (vec![vec![1, 6], vec![6, 1]], Some(vec![vec![2, -1], vec![-3, 2]])),
        "A1xA1" => (vec![vec![1, 2], vec![2, 1]], None),
        "affineA1" => (
            vec![vec![1, INFINITY], vec![INFINITY, 1]],
            Some(vec![vec![2, -2], vec![-2, 2]]),
        ),
        _ => return None,
    };
    Some(
        CoxeterSystem::new(name, &orders, cartan.as_deref())
            .expect("preset data is a valid realization"),
    )
}
