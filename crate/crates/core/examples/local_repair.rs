//! Erase one symbol of a codeword and rebuild it from its fiber.

use aglrc::gf::Elem;
use aglrc::lrc::LrcCode;

fn main() {
    let lrc = LrcCode::hermitian_x(3, 2).unwrap();
    println!("{} n={} k={}", lrc.construction(), lrc.n(), lrc.k());
    let msg: Vec<Elem> = (0..lrc.k() as u32).map(|i| Elem(i % 9)).collect();
    let cw = lrc.code().encode(&msg).unwrap();
    let lost = 13;
    let mut word: Vec<Option<Elem>> = cw.iter().copied().map(Some).collect();
    word[lost] = None;
    let (axis, value) = lrc.recover_any(&word, lost).unwrap();
    let part = lrc.partition(axis).unwrap();
    println!(
        "coordinate {lost}: recovered {} (was {}) from {:?} along {axis}",
        value.0,
        cw[lost].0,
        part.recovering_set(lost)
    );

    // the same fiber rejects a corrupted symbol
    let b = part.block_of(lost);
    let mut sym: Vec<Elem> = part.blocks[b].iter().map(|&c| cw[c]).collect();
    println!("fiber {b} consistent: {}", lrc.parity_check(axis, b, &sym).unwrap());
    sym[0] = lrc.field().add(sym[0], Elem(1));
    println!("after corruption: {}", lrc.parity_check(axis, b, &sym).unwrap());

    for row in lrc.locality_table().iter().take(4) {
        println!("{row:?}");
    }
}
