//! Values computed independently and frozen here.

use fibpart_core::delannoy::{
    count_delannoy, count_restricted_delannoy, enumerate_restricted_delannoy,
};
use fibpart_core::identities::{knight_move, se_difference_table};
use fibpart_core::polyfit::{diagonal_polynomial, Family};
use fibpart_core::quiver::validate_axioms;
use fibpart_core::triangles::{
    build_even_quiver, build_odd_quiver, even_rows_by_recurrence, even_table,
    odd_rows_by_recurrence, odd_table,
};
use fibpart_core::BigInt;

fn big(values: &[u64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

#[test]
fn quivers_satisfy_the_axioms() {
    for rows in [0, 1, 2, 5, 30] {
        assert!(validate_axioms(&build_even_quiver(rows)).is_valid());
        assert!(validate_axioms(&build_odd_quiver(rows)).is_valid());
    }
}

#[test]
fn three_evaluations_agree_to_row_80() {
    let even = even_table(80);
    let odd = odd_table(80);
    let even_rec = even_rows_by_recurrence(80);
    let odd_rec = odd_rows_by_recurrence(80);
    for (t, row) in even.rows() {
        assert_eq!(row, even_rec[t as usize].as_slice(), "even row {t}");
    }
    for (t, row) in odd.rows() {
        assert_eq!(row, odd_rec[t as usize].as_slice(), "odd row {t}");
    }
}

#[test]
fn later_rows() {
    let even = even_table(16);
    let odd = odd_table(16);
    assert_eq!(
        even.row(16).unwrap(),
        big(&[1, 16, 133, 749, 3152, 10348, 26818, 53650, 74443]).as_slice()
    );
    assert_eq!(
        odd.row(14).unwrap(),
        big(&[1, 13, 89, 413, 1417, 3693, 7141, 8829, 4550, 1717, 487, 101, 14, 1]).as_slice()
    );
}

#[test]
fn pylons_from_knight_moves() {
    let odd = odd_table(21);
    let pylon: Vec<_> = (1..=10).map(|i| knight_move(&odd, i).unwrap()).collect();
    assert_eq!(
        pylon,
        big(&[2, 7, 29, 130, 611, 2965, 14726, 74443, 381617, 1978582])
    );
}

#[test]
fn se_difference_rows() {
    let odd = odd_table(12);
    let table = se_difference_table(&odd, 12).unwrap();
    assert_eq!(
        table[12],
        big(&[1, 10, 54, 197, 517, 955, 995, 289, 73, 12, 1, 0])
    );
}

#[test]
fn diagonal_thresholds() {
    let even = even_table(60);
    let odd = odd_table(60);
    let t_min = |tbl, family, i| diagonal_polynomial(tbl, family, i, 60).unwrap().t_min;
    for i in 0..=8 {
        assert_eq!(t_min(&even, Family::Even, i), 2 * i);
    }
    assert_eq!(t_min(&odd, Family::OddPrime, 2), 3);
    assert_eq!(t_min(&odd, Family::OddPrime, 3), 5);
    assert_eq!(t_min(&odd, Family::OddDouble, 1), 4);
    assert_eq!(t_min(&odd, Family::OddDouble, 2), 6);
    assert_eq!(t_min(&odd, Family::OddDouble, 3), 8);
}

#[test]
fn delannoy_counts() {
    let restricted: Vec<_> = (0..=8).map(count_restricted_delannoy).collect();
    assert_eq!(
        restricted,
        big(&[1, 3, 12, 53, 247, 1192, 5897, 29723, 152020])
    );
    assert_eq!(count_delannoy(6), BigInt::from(8989));
    for n in 0..=6 {
        assert_eq!(
            enumerate_restricted_delannoy(n).unwrap(),
            count_restricted_delannoy(n as usize)
        );
    }
}
