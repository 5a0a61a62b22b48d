#pragma once

namespace spectral_chroma {

// Every numerical threshold in the toolkit is one of these.
inline constexpr double SPECTRUM_TOL = 1e-9;
inline constexpr double UNITARY_TOL = 1e-12;
inline constexpr double PROPERTY_TOL = 1e-8;

// Jacobi stopping rule: off-diagonal Frobenius norm relative to max(1, |A|_F).
inline constexpr double JACOBI_OFF_TOL = 1e-12;
inline constexpr int JACOBI_MAX_SWEEPS = 60;

// Pairing tolerance when collapsing the doubled spectrum of the real
// embedding of a complex Hermitian matrix.
inline constexpr double EMBEDDING_PAIR_TOL = 1e-7;

// Projector families must satisfy their identities to this accuracy.
inline constexpr double PROJECTOR_TOL = 1e-10;

// Slack subtracted before taking the ceiling of a bound in soundness checks.
inline constexpr double SOUNDNESS_SLACK = 1e-6;

}  // namespace spectral_chroma
