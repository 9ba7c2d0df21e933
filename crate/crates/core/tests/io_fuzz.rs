use hypoham::fixtures;
use hypoham::io::{read_planar_code, read_planar_code_lists, write_planar_code, write_planar_code_lists};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Single-byte corruptions of fixture records: the reader never panics, and
/// whatever it accepts re-encodes to exactly the corrupted bytes, so no
/// mutation breaking the record structure slips through.
#[test]
fn single_byte_mutations() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let records: Vec<Vec<u8>> = fixtures::plane_fixtures()
        .iter()
        .map(|g| write_planar_code(std::slice::from_ref(g), false).unwrap())
        .collect();
    let (mut rejected, mut accepted) = (0, 0);
    for i in 0..12_000 {
        let mut bytes = records[i % records.len()].clone();
        let pos = rng.gen_range(0..bytes.len());
        let old = bytes[pos];
        while bytes[pos] == old {
            bytes[pos] = rng.gen();
        }
        match read_planar_code_lists(&bytes) {
            Err(_) => rejected += 1,
            Ok(lists) => {
                accepted += 1;
                assert_eq!(write_planar_code_lists(&lists, false).unwrap(), bytes);
                if let Ok(gs) = read_planar_code(&bytes) {
                    assert_eq!(write_planar_code(&gs, false).unwrap(), bytes);
                }
            }
        }
    }
    assert_eq!(rejected + accepted, 12_000);
    assert!(rejected > 10_000, "only {rejected} corruptions rejected");
}

/// Corrupting the order byte always violates the length formula.
#[test]
fn order_byte_corruptions_are_rejected() {
    for g in fixtures::plane_fixtures() {
        let bytes = write_planar_code(&[g], false).unwrap();
        for b in 0..=255u8 {
            if b == bytes[0] {
                continue;
            }
            let mut bad = bytes.clone();
            bad[0] = b;
            assert!(read_planar_code(&bad).is_err(), "order byte {b}");
        }
    }
}
