use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("obstructions must be nonempty words")]
    EmptyObstruction,

    #[error("obstruction {0:?} is not over the presentation alphabet")]
    ForeignObstruction(String),

    #[error("obstruction file, line {line}: {message}")]
    ObstructionFile { line: usize, message: String },

    #[error(transparent)]
    Word(#[from] words_core::WordError),

    #[error(transparent)]
    Rotation(#[from] rotation::RotationError),
}
