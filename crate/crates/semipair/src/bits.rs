//! Flat bitset helpers shared by the passes that keep per-vertex flags.

#[inline]
pub(crate) fn bit(bits: &[u64], v: usize) -> bool {
    bits[v >> 6] >> (v & 63) & 1 != 0
}

#[inline]
pub(crate) fn set_bit(bits: &mut [u64], v: usize) {
    bits[v >> 6] |= 1 << (v & 63);
}

#[inline]
pub(crate) fn clear_bit(bits: &mut [u64], v: usize) {
    bits[v >> 6] &= !(1 << (v & 63));
}
