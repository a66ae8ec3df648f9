//! C ABI over the blendsmith engine.
//!
//! Resources are loaded once into an opaque [`BsEngine`] handle. Requests and
//! responses cross the boundary as UTF-8 JSON strings using the same schema
//! as the HTTP API. Every fallible call returns a [`BsStatus`]; the message
//! for the most recent failure on the calling thread is available from
//! [`bs_last_error`]. Strings returned through out-parameters are owned by
//! the caller and must be released with [`bs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use blendsmith::api::{GenerationRequest, RerankRequest};
use blendsmith::ranking;
use blendsmith::scoring::{appeal_of, AppealWeights};
use blendsmith::{RequestError, ResourceStore};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    Resource = 3,
    Pipeline = 4,
    InvalidRequest = 5,
    Internal = 6,
}

/// Loaded resource store. Immutable after loading, so one handle may be
/// shared across threads.
pub struct BsEngine {
    store: ResourceStore,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(BsStatus, String);

impl From<RequestError> for Failure {
    fn from(e: RequestError) -> Self {
        let status = match e {
            RequestError::Invalid(_) => BsStatus::InvalidRequest,
            RequestError::Pipeline(_) => BsStatus::Pipeline,
            RequestError::Score(_) => BsStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            BsStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            BsStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(BsStatus::NullArgument, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(BsStatus::InvalidUtf8, format!("{what}: {e}")))
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|e| Failure(BsStatus::Internal, e.to_string()))
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure(BsStatus::InvalidRequest, format!("invalid request: {e}")))
}

fn write_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> Result<(), Failure> {
    let text = serde_json::to_string(value).map_err(|e| Failure(BsStatus::Internal, e.to_string()))?;
    unsafe { *out = to_c_string(text)? };
    Ok(())
}

/// Loads the resource directory at `dir` and stores a new handle in `*out`.
///
/// # Safety
/// `dir` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn bs_engine_load(dir: *const c_char, out: *mut *mut BsEngine) -> BsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        let dir = read_str(dir, "dir")?;
        let store = ResourceStore::load_dir(Path::new(dir)).map_err(|e| Failure(BsStatus::Resource, e.to_string()))?;
        *out = Box::into_raw(Box::new(BsEngine { store }));
        Ok(())
    })
}

/// Releases a handle from [`bs_engine_load`]. Null is ignored.
///
/// # Safety
/// `engine` must come from [`bs_engine_load`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bs_engine_free(engine: *mut BsEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Runs generation for a JSON `GenerationRequest` and writes the JSON
/// response to `*out_json`.
///
/// # Safety
/// `engine` must be a live handle; `request_json` NUL-terminated; `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn bs_engine_generate(
    engine: *const BsEngine,
    request_json: *const c_char,
    out_json: *mut *mut c_char,
) -> BsStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        *out_json = ptr::null_mut();
        let engine = engine.as_ref().ok_or_else(|| null("engine"))?;
        let request: GenerationRequest = parse_json(read_str(request_json, "request_json")?)?;
        let response = blendsmith::generate(&engine.store, &request)?;
        write_json(&response, out_json)
    })
}

/// Re-scores previously returned names under new weights (JSON `RerankRequest`).
///
/// # Safety
/// `request_json` NUL-terminated; `out_json` valid.
#[no_mangle]
pub unsafe extern "C" fn bs_rerank(request_json: *const c_char, out_json: *mut *mut c_char) -> BsStatus {
    guard(|| {
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        *out_json = ptr::null_mut();
        let request: RerankRequest = parse_json(read_str(request_json, "request_json")?)?;
        let response = blendsmith::rerank(&request)?;
        write_json(&response, out_json)
    })
}

/// Appeal of four normalized features (readability, pronounceability,
/// memorability, uniqueness) under four weights in the same order.
///
/// # Safety
/// `features` and `weights` must point to four doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_appeal(features: *const f64, weights: *const f64, out: *mut f64) -> BsStatus {
    guard(|| {
        if features.is_null() || weights.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        let f = *(features as *const [f64; 4]);
        let w = AppealWeights::from_array(*(weights as *const [f64; 4]));
        *out = appeal_of(f, &w);
        Ok(())
    })
}

unsafe fn read_names<'a>(p: *const *const c_char, n: usize, what: &str) -> Result<Vec<&'a str>, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    std::slice::from_raw_parts(p, n)
        .iter()
        .map(|&s| read_str(s, what))
        .collect()
}

/// Kendall tau-a between two orderings of the same `n` names.
///
/// # Safety
/// `order_a` and `order_b` must each point to `n` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn bs_kendall_tau(
    order_a: *const *const c_char,
    order_b: *const *const c_char,
    n: usize,
    out: *mut f64,
) -> BsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let a = read_names(order_a, n, "order_a")?;
        let b = read_names(order_b, n, "order_b")?;
        *out = ranking::kendall_tau(&a, &b).map_err(|e| Failure(BsStatus::InvalidRequest, e.to_string()))?;
        Ok(())
    })
}

/// nDCG of `n` graded relevances listed in system order.
///
/// # Safety
/// `relevances` must point to `n` doubles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn bs_ndcg(relevances: *const f64, n: usize, out: *mut f64) -> BsStatus {
    guard(|| {
        if out.is_null() || (relevances.is_null() && n > 0) {
            return Err(null("argument"));
        }
        let rel = if n == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(relevances, n)
        };
        if rel.iter().any(|r| !r.is_finite() || *r < 0.0) {
            return Err(Failure(
                BsStatus::InvalidRequest,
                "relevances must be finite and non-negative".into(),
            ));
        }
        *out = ranking::ndcg_from_relevances(rel);
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null after a
/// success. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn bs_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned through an out-parameter. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn bs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
