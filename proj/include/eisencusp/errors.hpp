/*
   Copyright 2026 the eisencusp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EISENCUSP_ERRORS_HPP
#define EISENCUSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eisencusp {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct ConductorMismatch : std::domain_error {
    explicit ConductorMismatch(const std::string& what) : std::domain_error(what) {}
};

struct InvalidGaloisExponent : std::domain_error {
    explicit InvalidGaloisExponent(const std::string& what) : std::domain_error(what) {}
};

struct InvalidSubstitutionMatrix : std::domain_error {
    explicit InvalidSubstitutionMatrix(const std::string& what) : std::domain_error(what) {}
};

struct TwistRequiresIntegralExpansion : std::domain_error {
    explicit TwistRequiresIntegralExpansion(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedWeight : std::domain_error {
    explicit UnsupportedWeight(const std::string& what) : std::domain_error(what) {}
};

struct NotWeightTwo : std::domain_error {
    explicit NotWeightTwo(const std::string& what) : std::domain_error(what) {}
};

struct OracleNotConvergent : std::domain_error {
    explicit OracleNotConvergent(const std::string& what) : std::domain_error(what) {}
};

struct InconclusivePrecision : std::runtime_error {
    explicit InconclusivePrecision(const std::string& what) : std::runtime_error(what) {}
};

struct NotARepresentation : std::domain_error {
    explicit NotARepresentation(const std::string& what) : std::domain_error(what) {}
};

// Carries the truncation the caller must supply to make the solve well posed.
struct NeedMoreCoefficients : std::runtime_error {
    long required;
    explicit NeedMoreCoefficients(long required_)
        : std::runtime_error("target truncation too small, need " + std::to_string(required_)),
          required(required_) {}
};

struct RefusedUnverified : std::runtime_error {
    explicit RefusedUnverified(const std::string& what) : std::runtime_error(what) {}
};

struct RankUnstable : std::runtime_error {
    long budget;
    explicit RankUnstable(long budget_)
        : std::runtime_error("rank did not stabilize within precision budget " + std::to_string(budget_)),
          budget(budget_) {}
};

struct MalformedInput : std::runtime_error {
    std::string field;
    MalformedInput(const std::string& field_, const std::string& what)
        : std::runtime_error("malformed input in field '" + field_ + "': " + what), field(field_) {}
};

} // namespace eisencusp

#endif
