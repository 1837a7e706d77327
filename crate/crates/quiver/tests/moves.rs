//! The four local moves: mutating at a junction column turns the two blocks
//! meeting there into the transposed or replaced pair, exactly, label for
//! label.

use quiver::{build_quiver, is_isomorphic, Block, BlockSequence, Quiver};

fn quiver(blocks: &[Block]) -> Quiver {
    build_quiver(&BlockSequence::new(blocks.to_vec()).unwrap()).unwrap()
}

/// Mutate `before` at the junction column and demand the result matches the
/// fresh build of `after` under the bijection induced by vertex labels.
fn check_move(before: &[Block], junction: usize, lower: bool, after: &[Block]) {
    let q = quiver(before);
    let f = quiver(after);
    // A fresh build has the x at 2c and the + at 2c + 1.
    let j = if lower { 2 * junction + 1 } else { 2 * junction };
    let m = q.mutate_matrix(j);

    let find = |v: &quiver::VertexLabel| {
        f.vertices()
            .iter()
            .position(|w| w == v)
            .unwrap_or_else(|| panic!("no vertex at {v:?} in {after:?}"))
    };
    let map: Vec<usize> = m.vertices().iter().map(find).collect();
    for i in 0..m.vertex_count() {
        for l in 0..m.vertex_count() {
            assert_eq!(
                m.entry(i, l),
                f.entry(map[i], map[l]),
                "entry ({i}, {l}) after mutating {before:?} at column {junction}"
            );
        }
    }
    assert!(is_isomorphic(&m, &f).is_some());
}

#[test]
fn flat_flat_swaps_to_fall_rise_and_back() {
    check_move(
        &[Block::Zero, Block::Zero],
        1,
        true,
        &[Block::MinusI, Block::PlusI],
    );
    check_move(
        &[Block::MinusI, Block::PlusI],
        1,
        false,
        &[Block::Zero, Block::Zero],
    );
}

#[test]
fn rise_fall_swaps_to_flat_flat_and_back() {
    check_move(
        &[Block::PlusI, Block::MinusI],
        1,
        true,
        &[Block::Zero, Block::Zero],
    );
    check_move(
        &[Block::Zero, Block::Zero],
        1,
        false,
        &[Block::PlusI, Block::MinusI],
    );
}

#[test]
fn flat_fall_transposes_and_back() {
    check_move(
        &[Block::Zero, Block::MinusI, Block::PlusI],
        1,
        true,
        &[Block::MinusI, Block::Zero, Block::PlusI],
    );
    check_move(
        &[Block::MinusI, Block::Zero, Block::PlusI],
        1,
        false,
        &[Block::Zero, Block::MinusI, Block::PlusI],
    );
}

#[test]
fn rise_flat_transposes_and_back() {
    check_move(
        &[Block::PlusI, Block::Zero],
        1,
        true,
        &[Block::Zero, Block::PlusI],
    );
    check_move(
        &[Block::Zero, Block::PlusI],
        1,
        false,
        &[Block::PlusI, Block::Zero],
    );
}

#[test]
fn moves_also_hold_away_from_the_wrap_column() {
    check_move(
        &[Block::PlusI, Block::Zero, Block::Zero, Block::MinusI],
        2,
        true,
        &[Block::PlusI, Block::MinusI, Block::PlusI, Block::MinusI],
    );
    check_move(
        &[Block::PlusI, Block::PlusI, Block::MinusI, Block::Zero],
        2,
        true,
        &[Block::PlusI, Block::Zero, Block::Zero, Block::Zero],
    );
}
