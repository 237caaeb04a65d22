//! Python bindings. Structured results (certificates, witnesses, reports)
//! cross the boundary as JSON and come back as plain dicts.

use groupdet::verify::classified_groups;
use groupdet::{
    achieve, build_group, completeness_check, group_determinant, lambda_from_classifier, soundness_check,
    CoeffVector, EnumerationJob, Error, GroupSpec, SUPPORTED_NAMES,
};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(pygroupdet, GroupDetError, PyException);
create_exception!(pygroupdet, NotInSet, GroupDetError);
create_exception!(pygroupdet, UndecidableAtScale, GroupDetError);
create_exception!(pygroupdet, ConstructionGap, GroupDetError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::NotInSet { .. } => NotInSet::new_err(msg),
        Error::UndecidableAtScale(_) => UndecidableAtScale::new_err(msg),
        Error::ConstructionGap { .. } => ConstructionGap::new_err(msg),
        Error::UnsupportedGroup(_) | Error::BadGroupName(_) | Error::LengthMismatch { .. } => {
            PyValueError::new_err(msg)
        }
        _ => GroupDetError::new_err(msg),
    }
}

fn spec(name: &str) -> PyResult<GroupSpec> {
    let spec: GroupSpec = name.parse().map_err(to_py)?;
    if !spec.is_supported() {
        return Err(PyValueError::new_err(format!("unsupported group: {name}")));
    }
    Ok(spec)
}

fn from_json<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| GroupDetError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Determinant of the group matrix `(x_{g h^-1})` for the coefficient list.
#[pyfunction]
fn determinant(group: &str, coeffs: Vec<BigInt>) -> PyResult<BigInt> {
    let table = build_group(&spec(group)?).map_err(to_py)?;
    group_determinant(&table, &CoeffVector::new(coeffs)).map_err(to_py)
}

/// Membership certificate as a dict with keys verdict, branch, params and
/// undecidable.
#[pyfunction]
fn member<'py>(py: Python<'py>, group: &str, value: BigInt) -> PyResult<Bound<'py, PyAny>> {
    let cert = groupdet::member(&spec(group)?, &value).map_err(to_py)?;
    from_json(py, &cert)
}

/// Verified witness as a dict with keys group, coeffs, value and provenance.
#[pyfunction]
fn witness<'py>(py: Python<'py>, group: &str, value: BigInt) -> PyResult<Bound<'py, PyAny>> {
    let w = achieve(&spec(group)?, &value).map_err(to_py)?;
    from_json(py, &w)
}

/// Smallest `|v| >= 2` in the value set.
#[pyfunction]
fn lambda_value(group: &str) -> PyResult<u64> {
    lambda_from_classifier(&spec(group)?).map_err(to_py)
}

/// Sorted members of the value set in `[-bound, bound]`.
#[pyfunction]
fn set_window(group: &str, bound: u64) -> PyResult<Vec<i64>> {
    groupdet::set_window(&spec(group)?, bound).map_err(to_py)
}

/// Soundness over `[-radius, radius]^n` and completeness over
/// `[-bound, bound]`, as a report dict.
#[pyfunction]
fn verify<'py>(py: Python<'py>, group: &str, radius: u32, bound: u64) -> PyResult<Bound<'py, PyAny>> {
    let g = spec(group)?;
    if !classified_groups().contains(&g) {
        return Err(PyValueError::new_err(format!("{group} has no value-set classifier")));
    }
    let report = py
        .detach(|| {
            let mut report = soundness_check(&g, &EnumerationJob::new(g.clone(), radius, bound))?;
            report.completeness_misses = completeness_check(&g, bound)?.completeness_misses;
            Ok(report)
        })
        .map_err(to_py)?;
    from_json(py, &report)
}

/// `(name, order)` for every supported group.
#[pyfunction]
fn groups() -> Vec<(String, usize)> {
    SUPPORTED_NAMES
        .iter()
        .map(|n| (n.to_string(), n.parse::<GroupSpec>().map_or(0, |g| g.order())))
        .collect()
}

#[pymodule]
fn pygroupdet(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("GroupDetError", py.get_type::<GroupDetError>())?;
    m.add("NotInSet", py.get_type::<NotInSet>())?;
    m.add("UndecidableAtScale", py.get_type::<UndecidableAtScale>())?;
    m.add("ConstructionGap", py.get_type::<ConstructionGap>())?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(member, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_value, m)?)?;
    m.add_function(wrap_pyfunction!(set_window, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(groups, m)?)?;
    Ok(())
}
