//! The characteristic function two ways: implicit sign tags versus an
//! explicit bit sequence, and when each inversion mode applies.
//!
//! ```bash
//! cargo run -p idemperm --example explicit_tags
//! ```

use idemperm::array::{to_explicit, to_implicit, KeyArray};
use idemperm::bits::BitScratch;
use idemperm::transforms::{self, TagMode};

fn main() {
    let pi = KeyArray::from_vec(vec![3, -1, 6, 8, -4, 7, -5, -9, -10, 2]).unwrap();
    println!("sign-tagged:   {pi}");

    // strip the tags into an explicit bit sequence
    let (plain, tags) = to_explicit(&pi);
    let tag_bits: Vec<u8> = (1..=pi.len()).map(|i| tags.get(i) as u8).collect();
    println!("magnitudes:    {plain}");
    println!("tag bits:      {tag_bits:?} (popcount = degree = {})", tags.popcount());

    // with explicit tags the sign bit is free, so the classic sign-tagged
    // inversion works on the magnitudes
    let mut inv_plain = plain.clone().into_vec();
    transforms::invert_inplace(inv_plain.as_mut_slice(), TagMode::SignTag, None).unwrap();
    println!("inverted (sign mode):  {inv_plain:?}");

    // with implicit tags the sign bit is taken; inversion must borrow an
    // n-bit scratch instead
    let mut inv_tagged = pi.clone().into_vec();
    let err = transforms::invert_inplace(inv_tagged.as_mut_slice(), TagMode::SignTag, None);
    println!("sign mode on tagged input: {err:?}");
    let mut scratch = BitScratch::new(inv_tagged.len());
    transforms::invert_inplace(inv_tagged.as_mut_slice(), TagMode::BitTag, Some(&mut scratch))
        .unwrap();
    println!("inverted (bit mode):   {inv_tagged:?}");

    // the two agree once the explicit tags are re-embedded: inverting a
    // permutation also inverts its characteristic function
    let mut inv_tags = idemperm::bits::CharacteristicBits::new(pi.len());
    for i in 1..=pi.len() {
        if tags.get(i) {
            // position of tag i moves to the cell its magnitude named
            let dest = plain.as_slice()[i - 1] as usize;
            inv_tags.set(dest, true);
        }
    }
    let rebuilt = to_implicit(
        &KeyArray::from_vec(inv_plain).unwrap(),
        &inv_tags,
    )
    .unwrap();
    assert_eq!(rebuilt.as_slice(), inv_tagged.as_slice());
    println!("re-embedded explicit = bit-tagged result");
}
