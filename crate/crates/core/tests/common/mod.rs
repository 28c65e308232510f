#![allow(dead_code)]

use conewords::{Letter, ReducedWord};
use proptest::prelude::*;

pub fn word(max_len: usize) -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec(0usize..6, 0..=max_len)
        .prop_map(|codes| ReducedWord::from_letters(codes.into_iter().map(|c| Letter::ALL[c])))
}

pub fn nontrivial_word(max_len: usize) -> impl Strategy<Value = ReducedWord> {
    word(max_len).prop_filter("nontrivial", |w| !w.is_identity())
}

pub fn c_free_word(max_len: usize) -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec(0usize..4, 0..=max_len).prop_map(|codes| {
        let pool = [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV];
        ReducedWord::from_letters(codes.into_iter().map(|c| pool[c]))
    })
}

pub fn positive_word(max_len: usize) -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec(0usize..3, 1..=max_len)
        .prop_map(|codes| ReducedWord::from_letters(codes.into_iter().map(|c| Letter::ALL[c])))
}

/// Nontrivial cyclically reduced word.
pub fn cyclic_word(max_len: usize) -> impl Strategy<Value = ReducedWord> {
    nontrivial_word(max_len).prop_map(|w| w.cyclic_reduce().core)
}
