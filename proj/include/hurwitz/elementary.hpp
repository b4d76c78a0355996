// Copyright 2026 The hurwitz-cf Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Enclosures of pi and of the circular / hyperbolic sine and cosine.
// All of them are Taylor series summed in interval arithmetic with the
// truncation error added to the enclosure.

#ifndef HURWITZ_ELEMENTARY_HPP
#define HURWITZ_ELEMENTARY_HPP

#include "hurwitz/precreal.hpp"

namespace hurwitz {

/// pi with a mantissa of at least `bits` bits (Machin's formula).
PrecReal pi_enclosure(mpfr_prec_t bits, long digits);

enum class TrigKind { kSin, kCos, kSinh, kCosh };

/// Evaluates the function on the interval `z`; the mantissa size is
/// z.bits() plus guard bits that grow with |z|.
PrecReal trig_enclosure(TrigKind kind, const PrecReal& z);

inline PrecReal sin_enclosure(const PrecReal& z) { return trig_enclosure(TrigKind::kSin, z); }
inline PrecReal cos_enclosure(const PrecReal& z) { return trig_enclosure(TrigKind::kCos, z); }
inline PrecReal sinh_enclosure(const PrecReal& z) { return trig_enclosure(TrigKind::kSinh, z); }
inline PrecReal cosh_enclosure(const PrecReal& z) { return trig_enclosure(TrigKind::kCosh, z); }

}  // namespace hurwitz

#endif  // HURWITZ_ELEMENTARY_HPP
