use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state has vanishing norm")]
    ZeroState,
    #[error("mode transform is not unitary (deviation {0:e})")]
    NonUnitary(f64),
    #[error("no elimination root converged")]
    NoRootFound,
    #[error("decomposition requested for the wrong entanglement class")]
    WrongClass,
    #[error("parameters are not normalized: r^2 + 3s^2 + t^2 = {0}")]
    NotNormalized(f64),
    #[error("mean spin vanishes, transverse frame is undefined")]
    DegenerateFrame,
    #[error("parameter {0} out of range")]
    OutOfRange(f64),
    #[error("mean spin does not vanish, use the frame path")]
    NotDegenerate,
    #[error("internal consistency check failed: {0} = {1:e}")]
    Inconsistent(&'static str, f64),
}
