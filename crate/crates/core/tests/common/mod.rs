//! Quivers and sequences transcribed from worked examples.
#![allow(dead_code)]

use mgs_core::{MutationSequence, Quiver};

pub fn quiver(n: usize, arrows: &[(usize, usize)]) -> Quiver {
    Quiver::from_arrows(n, arrows).expect("valid quiver")
}

pub fn three_cycle() -> Quiver {
    quiver(3, &[(1, 2), (2, 3), (3, 1)])
}

/// Six 3-cycles around the triangle 1,2,3.
#[rustfmt::skip]
pub fn six_triangles() -> Quiver {
    quiver(
        13,
        &[
            (1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (4, 6), (6, 7), (7, 4), (5, 8),
            (8, 9), (9, 5), (8, 10), (10, 11), (11, 8), (13, 10), (10, 12), (12, 13),
        ],
    )
}

pub fn six_triangles_sequence() -> MutationSequence {
    MutationSequence::new(vec![13, 7, 11, 9, 5, 3, 1, 2, 3, 4, 5, 8, 9, 10, 11, 12, 13, 6, 7])
}

/// 25 vertices, five 3-cycles in three configurations joined by fans.
#[rustfmt::skip]
pub fn twenty_five() -> Quiver {
    quiver(
        25,
        &[
            (4, 5), (5, 6), (6, 4), (3, 5), (2, 3), (1, 2), (8, 4), (8, 7), (6, 9), (9, 10),
            (10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 13), (14, 22), (22, 23), (15, 16), (16, 17),
            (17, 15), (16, 25), (25, 24), (24, 16), (17, 18), (18, 19), (19, 17), (21, 20), (18, 20),
        ],
    )
}

pub fn twenty_five_sequence() -> MutationSequence {
    MutationSequence::new(vec![
        8, 1, 2, 3, 4, 5, 6, 4, 9, 10, 11, 12, 19, 24, 17, 15, 13, 14, 15, 16, 17, 25, 24, 18, 19, 7, 21, 20, 22, 23,
    ])
}

/// Four 3-cycles in a chain; shared vertices 3, 5, 7.
#[rustfmt::skip]
pub fn chain_first() -> Quiver {
    quiver(
        9,
        &[
            (1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (5, 6), (6, 7), (7, 5), (7, 8),
            (8, 9), (9, 7),
        ],
    )
}

/// As [`chain_first`] with the second 3-cycle reversed.
#[rustfmt::skip]
pub fn chain_second() -> Quiver {
    quiver(
        9,
        &[
            (1, 2), (2, 3), (3, 1), (5, 4), (4, 3), (3, 5), (5, 6), (6, 7), (7, 5), (7, 8),
            (8, 9), (9, 7),
        ],
    )
}

/// Two 3-cycles sharing vertex 3.
pub fn two_triangles() -> Quiver {
    quiver(5, &[(2, 1), (1, 3), (3, 2), (3, 5), (5, 4), (4, 3)])
}

/// 1->2<-3->4<-5<-6<-7<-8->9->10->11
#[rustfmt::skip]
pub fn eleven_acyclic() -> Quiver {
    quiver(
        11,
        &[
            (1, 2), (3, 2), (3, 4), (5, 4), (6, 5), (7, 6), (8, 7), (8, 9), (9, 10), (10, 11),
        ],
    )
}
