//! Holds the `acceptance` test target, which prints one pass/fail line per
//! acceptance criterion. It lives in its own package so that a failing
//! criterion does not stop the other test binaries of the workspace.
