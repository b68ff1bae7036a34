/*
   Copyright 2026 The gft Authors

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

#ifndef GFT_ERRORS_HPP
#define GFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gft {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidLambda : public DomainError {
public:
    using DomainError::DomainError;
};

class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

/// A bound check was requested on a function that failed its membership scan.
class NotCertified : public Error {
public:
    using Error::Error;
};

/// Malformed coefficient file or JSON payload.
class FormatError : public Error {
public:
    using Error::Error;
};

class NoSignChange : public Error {
public:
    using Error::Error;
};

class MaxIterations : public Error {
public:
    using Error::Error;
};

class UnknownEquation : public Error {
public:
    using Error::Error;
};

/// The denominator of a geometric functional vanished (modulus below 1e-14)
/// on a scanned circle.
class PoleEncountered : public Error {
public:
    PoleEncountered(const std::string& what, double radius, double theta, double last_good_radius)
        : Error(what), radius_(radius), theta_(theta), last_good_radius_(last_good_radius) {}

    double radius() const noexcept { return radius_; }
    double theta() const noexcept { return theta_; }
    /// Largest radius at which the functional was confirmed positive (0 if none).
    double last_good_radius() const noexcept { return last_good_radius_; }

private:
    double radius_;
    double theta_;
    double last_good_radius_;
};

}  // namespace gft

#endif  // GFT_ERRORS_HPP
