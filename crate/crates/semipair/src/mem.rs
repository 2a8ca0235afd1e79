//! Huge-page plumbing for the multi-megabyte arrays. Random probes across
//! tens of MB of 4 KiB pages spend more time in TLB walks than in the loads
//! themselves, so buffers past a couple of megabytes ask the kernel for
//! 2 MiB pages: first as a policy for pages not yet faulted in, then as a
//! synchronous collapse of whatever is already resident.

/// Request huge pages over `v`'s allocation. Quietly does nothing off
/// Linux, for small buffers, or when the kernel refuses.
pub(crate) fn hugepage<T>(v: &Vec<T>) {
    #[cfg(target_os = "linux")]
    {
        let bytes = v.capacity() * std::mem::size_of::<T>();
        if bytes < 2 << 20 {
            return;
        }
        let page = 4096usize;
        let addr = v.as_ptr() as usize & !(page - 1);
        let len = v.as_ptr() as usize + bytes - addr;
        // SAFETY: madvise with these hints changes neither the contents nor
        // the validity of the mapping; a refusal just keeps small pages
        unsafe {
            libc::madvise(addr as *mut libc::c_void, len, libc::MADV_HUGEPAGE);
            libc::madvise(addr as *mut libc::c_void, len, libc::MADV_COLLAPSE);
        }
    }
    #[cfg(not(target_os = "linux"))]
    let _ = v;
}
