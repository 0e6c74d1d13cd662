//! C ABI for pbzlab. Algebras are opaque handles; functions return 0 on
//! success and a negative error code otherwise, with the message available
//! from `pbz_last_error`. Strings returned by this library must be released
//! with `pbz_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use pbzlab::algebra::Flavor;
use pbzlab::constructions::{catalog, CatalogName};
use pbzlab::io::AlgebraFile;
use pbzlab::{congruence, terms, FiniteAlgebra};

pub const PBZ_OK: i32 = 0;
/// Invalid argument (null pointer, bad UTF-8, unknown flavor).
pub const PBZ_EINVAL: i32 = -1;
/// Construction or validation failure; see pbz_last_error.
pub const PBZ_EALGEBRA: i32 = -2;
/// Parse error in a term, identity or JSON document.
pub const PBZ_EPARSE: i32 = -3;

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

/// An opaque algebra handle.
pub struct PbzAlgebra {
    inner: FiniteAlgebra,
}

unsafe fn str_arg<'a>(p: *const c_char) -> Option<&'a str> {
    if p.is_null() {
        set_error("null string argument".into());
        return None;
    }
    match unsafe { CStr::from_ptr(p) }.to_str() {
        Ok(s) => Some(s),
        Err(_) => {
            set_error("string argument is not UTF-8".into());
            None
        }
    }
}

fn flavor_arg(flavor: i32) -> Option<Flavor> {
    match flavor {
        0 => Some(Flavor::Lattice),
        1 => Some(Flavor::Bi),
        2 => Some(Flavor::Bz),
        _ => {
            set_error(format!("unknown flavor code {flavor} (0=lattice, 1=BI, 2=BZ)"));
            None
        }
    }
}

/// Last error message for this thread, or null. Owned by the library; do
/// not free.
#[no_mangle]
pub extern "C" fn pbz_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a catalog algebra (e.g. "D:4", "MO:2", "GD:2", "SANDWICH:M3").
/// Returns null on failure.
#[no_mangle]
pub extern "C" fn pbz_catalog(name: *const c_char) -> *mut PbzAlgebra {
    let Some(name) = (unsafe { str_arg(name) }) else { return ptr::null_mut() };
    let parsed: CatalogName = match name.parse() {
        Ok(p) => p,
        Err(e) => {
            set_error(e.to_string());
            return ptr::null_mut();
        }
    };
    match catalog(&parsed) {
        Ok(a) => Box::into_raw(Box::new(PbzAlgebra { inner: a })),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Loads an algebra from a JSON document (the pbzlab file format).
/// Returns null on failure.
#[no_mangle]
pub extern "C" fn pbz_from_json(json: *const c_char) -> *mut PbzAlgebra {
    let Some(text) = (unsafe { str_arg(json) }) else { return ptr::null_mut() };
    let file: AlgebraFile = match serde_json::from_str(text) {
        Ok(f) => f,
        Err(e) => {
            set_error(e.to_string());
            return ptr::null_mut();
        }
    };
    match file.to_algebra() {
        Ok(a) => Box::into_raw(Box::new(PbzAlgebra { inner: a })),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases an algebra handle. Null is ignored.
#[no_mangle]
pub extern "C" fn pbz_free(a: *mut PbzAlgebra) {
    if !a.is_null() {
        drop(unsafe { Box::from_raw(a) });
    }
}

/// Element count, or PBZ_EINVAL for a null handle.
#[no_mangle]
pub extern "C" fn pbz_n(a: *const PbzAlgebra) -> i32 {
    match unsafe { a.as_ref() } {
        Some(a) => a.inner.n() as i32,
        None => PBZ_EINVAL,
    }
}

/// Flavor code: 0 lattice, 1 BI, 2 BZ; PBZ_EINVAL for null.
#[no_mangle]
pub extern "C" fn pbz_flavor(a: *const PbzAlgebra) -> i32 {
    match unsafe { a.as_ref() } {
        Some(a) => match a.inner.flavor() {
            Flavor::Lattice => 0,
            Flavor::Bi => 1,
            Flavor::Bz => 2,
        },
        None => PBZ_EINVAL,
    }
}

/// Classification as a JSON object; release with pbz_string_free. Null on
/// failure.
#[no_mangle]
pub extern "C" fn pbz_classify_json(a: *const PbzAlgebra) -> *mut c_char {
    let Some(a) = (unsafe { a.as_ref() }) else {
        set_error("null algebra handle".into());
        return ptr::null_mut();
    };
    let r = a.inner.classify();
    let flag = |v: Option<bool>| match v {
        Some(b) => serde_json::Value::Bool(b),
        None => serde_json::Value::Null,
    };
    let obj = serde_json::json!({
        "n": a.inner.n(),
        "pseudo_kleene": flag(r.pseudo_kleene),
        "ortholattice": flag(r.ortholattice),
        "orthomodular": flag(r.orthomodular),
        "paraorthomodular": flag(r.paraorthomodular),
        "star": flag(r.star),
        "bz": flag(r.bz),
        "pbz": flag(r.pbz),
        "antiortholattice": flag(r.antiortholattice),
        "sdm": flag(r.sdm),
        "sk": flag(r.sk),
        "j0": flag(r.j0),
        "distributive": flag(r.distributive),
        "modular": flag(r.modular),
        "boolean_algebra": flag(r.boolean_algebra),
    });
    CString::new(obj.to_string()).map_or(ptr::null_mut(), CString::into_raw)
}

/// Tests an identity (pbzlab syntax, e.g. "x ^ y = y ^ x"). Writes 1 into
/// *holds if it is satisfied, 0 otherwise. Returns PBZ_OK or an error code.
#[no_mangle]
pub extern "C" fn pbz_satisfies(
    a: *const PbzAlgebra,
    identity: *const c_char,
    holds: *mut i32,
) -> i32 {
    let Some(a) = (unsafe { a.as_ref() }) else {
        set_error("null algebra handle".into());
        return PBZ_EINVAL;
    };
    if holds.is_null() {
        set_error("null output pointer".into());
        return PBZ_EINVAL;
    }
    let Some(text) = (unsafe { str_arg(identity) }) else { return PBZ_EINVAL };
    let id = match terms::parse_identity(text) {
        Ok(id) => id,
        Err(e) => {
            set_error(e.to_string());
            return PBZ_EPARSE;
        }
    };
    match terms::satisfies(&a.inner, &id) {
        Ok(sat) => {
            unsafe { *holds = sat.holds as i32 };
            PBZ_OK
        }
        Err(e) => {
            set_error(e.to_string());
            PBZ_EALGEBRA
        }
    }
}

/// Number of congruences at the given flavor (0 lattice, 1 BI, 2 BZ), or a
/// negative error code.
#[no_mangle]
pub extern "C" fn pbz_congruence_count(a: *const PbzAlgebra, flavor: i32) -> i32 {
    let Some(a) = (unsafe { a.as_ref() }) else {
        set_error("null algebra handle".into());
        return PBZ_EINVAL;
    };
    let Some(flavor) = flavor_arg(flavor) else { return PBZ_EINVAL };
    match congruence::all_congruences(&a.inner, flavor) {
        Ok(cons) => cons.len() as i32,
        Err(e) => {
            set_error(e.to_string());
            PBZ_EALGEBRA
        }
    }
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub extern "C" fn pbz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    #[test]
    fn error_codes_round_trip() {
        assert!(pbz_catalog(ptr::null()).is_null());
        let bad = CString::new("NOPE:9").unwrap();
        assert!(pbz_catalog(bad.as_ptr()).is_null());
        let msg = unsafe { CStr::from_ptr(pbz_last_error()) };
        assert!(!msg.to_bytes().is_empty());
    }
}
