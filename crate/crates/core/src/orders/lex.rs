//! Lexicographic extensions.

/// Strict lexicographic extension of a single strict order, with syntactic
/// equality on the common prefix. A longer list with an equal prefix is
/// greater.
pub fn lex_strict<T: PartialEq>(xs: &[T], ys: &[T], mut gt: impl FnMut(&T, &T) -> bool) -> bool {
    lex_strict_at(xs, ys, &mut gt).is_some()
}

/// Like [`lex_strict`], returning the deciding position (`None` when the
/// length decides).
pub(crate) fn lex_strict_at<T: PartialEq>(
    xs: &[T],
    ys: &[T],
    gt: &mut impl FnMut(&T, &T) -> bool,
) -> Option<Option<usize>> {
    for (k, (x, y)) in xs.iter().zip(ys).enumerate() {
        if x == y {
            continue;
        }
        return gt(x, y).then_some(Some(k));
    }
    (xs.len() > ys.len()).then_some(None)
}

/// Lexicographic extension of an order pair, returning `(weak, strict)`.
///
/// Strict: the weak relation holds on every earlier position and the strict
/// one at the first position where they differ, or `xs` is longer and weakly
/// above on the whole of `ys`. Weak: strict, or equal lengths and weak
/// position-wise. A shorter list never weakly exceeds a longer one.
pub fn pair_lex<T>(
    xs: &[T],
    ys: &[T],
    mut ge: impl FnMut(&T, &T) -> bool,
    mut gt: impl FnMut(&T, &T) -> bool,
) -> (bool, bool) {
    let weak = pair_lex_at(xs, ys, false, &mut ge, &mut gt).is_some();
    let strict = pair_lex_at(xs, ys, true, &mut ge, &mut gt).is_some();
    (weak, strict)
}

/// One component of [`pair_lex`], returning the position at which the strict
/// relation decided (`None` when lengths decide).
pub(crate) fn pair_lex_at<T>(
    xs: &[T],
    ys: &[T],
    strict: bool,
    ge: &mut impl FnMut(&T, &T) -> bool,
    gt: &mut impl FnMut(&T, &T) -> bool,
) -> Option<Option<usize>> {
    for (k, (x, y)) in xs.iter().zip(ys).enumerate() {
        if gt(x, y) {
            return Some(Some(k));
        }
        if !ge(x, y) {
            return None;
        }
    }
    let longer = if strict {
        xs.len() > ys.len()
    } else {
        xs.len() >= ys.len()
    };
    longer.then_some(None)
}
