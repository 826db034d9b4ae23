//! C ABI over `sparing-core`.
//!
//! Graphs and solver results are opaque handles owned by the caller and
//! released with their `_free` function. Every fallible call returns a
//! [`SparingStatus`]; on failure a message for the calling thread is
//! available from [`sparing_last_error_message`]. Strings returned by the
//! library are released with [`sparing_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use sparing_core::dimacs::{read_dimacs, DimacsError};
use sparing_core::formulas::{evaluate, FormulaError, TheoremId, Variant};
use sparing_core::harness::{run_grid, summarize, to_csv, GridSpec, HarnessError};
use sparing_core::solver::{SolverError, DEFAULT_BRUTEFORCE_CAP};
use sparing_core::spec_string::{Instance, SpecError, SpecExpr};
use sparing_core::{sparing_bruteforce, sparing_corona, sparing_mwis, SolverConfig};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SparingStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidString = 2,
    ParseError = 3,
    InvalidInput = 4,
    TooLarge = 5,
    Io = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SparingMethod {
    /// Corona decomposition for corona graphs, branch and bound otherwise.
    Auto = 0,
    BruteForce = 1,
    Mwis = 2,
    Corona = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SparingVariant {
    Printed = 0,
    Derived = 1,
}

/// Opaque graph handle.
pub struct SparingGraph {
    instance: Instance,
}

/// Opaque solver result handle.
pub struct SparingResult {
    inner: sparing_core::SparingResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Error(SparingStatus, String);

impl Error {
    fn new(status: SparingStatus, message: impl ToString) -> Self {
        Error(status, message.to_string())
    }
}

impl From<SpecError> for Error {
    fn from(e: SpecError) -> Self {
        let status = match &e {
            SpecError::Parse { .. } => SparingStatus::ParseError,
            SpecError::Io { .. } => SparingStatus::Io,
            SpecError::Dimacs { source, .. } => dimacs_status(source),
            SpecError::Graph(_) => SparingStatus::InvalidInput,
        };
        Error::new(status, e)
    }
}

impl From<DimacsError> for Error {
    fn from(e: DimacsError) -> Self {
        Error::new(dimacs_status(&e), e)
    }
}

impl From<SolverError> for Error {
    fn from(e: SolverError) -> Self {
        let status = match e {
            SolverError::TooLarge { .. } => SparingStatus::TooLarge,
            SolverError::UnknownMethod(_) => SparingStatus::InvalidInput,
        };
        Error::new(status, e)
    }
}

impl From<FormulaError> for Error {
    fn from(e: FormulaError) -> Self {
        Error::new(SparingStatus::InvalidInput, e)
    }
}

impl From<HarnessError> for Error {
    fn from(e: HarnessError) -> Self {
        let status = match &e {
            HarnessError::Budget { .. } => SparingStatus::TooLarge,
            HarnessError::GridFile(_) => SparingStatus::ParseError,
            HarnessError::Io(_) => SparingStatus::Io,
            HarnessError::SolverDisagreement { .. } | HarnessError::InvalidWitness { .. } => {
                SparingStatus::Internal
            }
            _ => SparingStatus::InvalidInput,
        };
        Error::new(status, e)
    }
}

fn dimacs_status(e: &DimacsError) -> SparingStatus {
    match e {
        DimacsError::Graph(_) => SparingStatus::InvalidInput,
        _ => SparingStatus::ParseError,
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
}

/// Runs `body`, turning errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Error>) -> SparingStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SparingStatus::Ok,
        Ok(Err(Error(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SparingStatus::Internal
        }
    }
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), Error> {
    if p.is_null() {
        Err(Error::new(
            SparingStatus::NullPointer,
            format!("{what} is null"),
        ))
    } else {
        Ok(())
    }
}

/// # Safety
/// `p` must be null or a valid nul-terminated string.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Error> {
    non_null(p, what)?;
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error::new(SparingStatus::InvalidString, format!("{what} is not UTF-8")))
}

fn into_c_string(text: String) -> Result<*mut c_char, Error> {
    CString::new(text)
        .map(CString::into_raw)
        .map_err(|_| Error::new(SparingStatus::Internal, "output contains a nul byte"))
}

/// Message for the last failed call on this thread, or null if none.
/// Release it with `sparing_string_free`.
#[no_mangle]
pub extern "C" fn sparing_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null_mut(), |m| m.clone().into_raw())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sparing_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from a spec string such as `corona(cycle:3,path:2)`.
///
/// # Safety
/// `spec` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sparing_graph_from_spec(
    spec: *const c_char,
    out: *mut *mut SparingGraph,
) -> SparingStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = read_str(spec, "spec")?;
        let instance = SpecExpr::parse(spec)?.resolve()?;
        *out = Box::into_raw(Box::new(SparingGraph { instance }));
        Ok(())
    })
}

/// Builds a graph from DIMACS-like text (`p edge n m` then `e u v` lines).
///
/// # Safety
/// `text` must be a valid nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sparing_graph_from_dimacs(
    text: *const c_char,
    out: *mut *mut SparingGraph,
) -> SparingStatus {
    guard(|| {
        non_null(out, "out")?;
        let graph = read_dimacs(read_str(text, "text")?)?;
        *out = Box::into_raw(Box::new(SparingGraph {
            instance: Instance::Plain(graph),
        }));
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sparing_graph_free(graph: *mut SparingGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sparing_graph_vertex_count(graph: *const SparingGraph) -> usize {
    graph
        .as_ref()
        .map_or(0, |g| g.instance.graph().vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sparing_graph_edge_count(graph: *const SparingGraph) -> usize {
    graph
        .as_ref()
        .map_or(0, |g| g.instance.graph().edge_count())
}

/// Computes the sparing number. `node_limit` of 0 means unlimited.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sparing_solve(
    graph: *const SparingGraph,
    method: SparingMethod,
    node_limit: u64,
    out: *mut *mut SparingResult,
) -> SparingStatus {
    guard(|| {
        non_null(graph, "graph")?;
        non_null(out, "out")?;
        let instance = &(*graph).instance;
        let config = SolverConfig {
            bruteforce_cap: DEFAULT_BRUTEFORCE_CAP,
            node_limit: (node_limit > 0).then_some(node_limit),
            time_limit: None,
        };
        let inner = match (method, instance) {
            (SparingMethod::BruteForce, _) => sparing_bruteforce(instance.graph(), &config)?,
            (SparingMethod::Mwis, _) | (SparingMethod::Auto, Instance::Plain(_)) => {
                sparing_mwis(instance.graph(), &config)
            }
            (SparingMethod::Corona | SparingMethod::Auto, Instance::Corona(layout)) => {
                sparing_corona(layout, &config)
            }
            (SparingMethod::Corona, Instance::Plain(_)) => {
                return Err(Error::new(
                    SparingStatus::InvalidInput,
                    "the corona method needs a graph built from a corona spec",
                ))
            }
        };
        *out = Box::into_raw(Box::new(SparingResult { inner }));
        Ok(())
    })
}

/// # Safety
/// `result` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sparing_result_free(result: *mut SparingResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Mono-indexed edge count of the witness; the sparing number when optimal.
///
/// # Safety
/// `result` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sparing_result_value(result: *const SparingResult) -> u64 {
    result.as_ref().map_or(0, |r| r.inner.value as u64)
}

/// False when a search budget ran out before optimality was proven.
///
/// # Safety
/// `result` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sparing_result_optimal(result: *const SparingResult) -> bool {
    result.as_ref().is_some_and(|r| r.inner.optimal)
}

/// Whether vertex `v` is non-mono in the witness.
///
/// # Safety
/// `result` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sparing_result_is_nonmono(
    result: *const SparingResult,
    v: usize,
    out: *mut bool,
) -> SparingStatus {
    guard(|| {
        non_null(result, "result")?;
        non_null(out, "out")?;
        let witness = &(*result).inner.witness;
        if v >= witness.len() {
            return Err(Error::new(
                SparingStatus::InvalidInput,
                format!("vertex {v} out of range for {} vertices", witness.len()),
            ));
        }
        *out = !witness.is_mono(v);
        Ok(())
    })
}

/// Evaluates a closed form as the exact fraction `num / den` (den > 0).
///
/// # Safety
/// `theorem` must be a valid string, `params` must point to `len` values
/// (or be null with `len == 0`), and `num`, `den` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sparing_formula_eval(
    theorem: *const c_char,
    params: *const i64,
    len: usize,
    variant: SparingVariant,
    num: *mut i64,
    den: *mut i64,
) -> SparingStatus {
    guard(|| {
        non_null(num, "num")?;
        non_null(den, "den")?;
        let id: TheoremId = read_str(theorem, "theorem")?.parse()?;
        let params = if len == 0 {
            &[][..]
        } else {
            non_null(params, "params")?;
            std::slice::from_raw_parts(params, len)
        };
        let variant = match variant {
            SparingVariant::Printed => Variant::Printed,
            SparingVariant::Derived => Variant::Derived,
        };
        let value = evaluate(id, params, variant)?;
        *num = *value.numer();
        *den = *value.denom();
        Ok(())
    })
}

/// Runs the conformance grid and returns the CSV report in `out_csv`.
/// `grid_json` may be null for the default grid. `all_claims_hold` may be
/// null; otherwise it receives whether every closed form held.
///
/// # Safety
/// Non-null pointers must be valid; `out_csv` must not be null.
#[no_mangle]
pub unsafe extern "C" fn sparing_verify_csv(
    grid_json: *const c_char,
    out_csv: *mut *mut c_char,
    all_claims_hold: *mut bool,
) -> SparingStatus {
    guard(|| {
        non_null(out_csv, "out_csv")?;
        let spec = if grid_json.is_null() {
            GridSpec::default()
        } else {
            GridSpec::from_json(read_str(grid_json, "grid_json")?)?
        };
        let rows = run_grid(&spec)?;
        let summary = summarize(&rows)?;
        let csv = to_csv(&rows)?;
        *out_csv = into_c_string(csv)?;
        if !all_claims_hold.is_null() {
            *all_claims_hold = summary.all_claims_hold;
        }
        Ok(())
    })
}
