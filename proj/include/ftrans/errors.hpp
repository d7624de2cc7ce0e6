/*
 * Copyright 2026 The ftrans Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace ftrans {

class EmptySequence : public std::invalid_argument {
public:
    EmptySequence() : std::invalid_argument("point sequence must contain at least one point") {}
};

class NonFiniteCoordinate : public std::invalid_argument {
public:
    NonFiniteCoordinate() : std::invalid_argument("point coordinates must be finite") {}
};

class IndexOutOfRange : public std::out_of_range {
public:
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

class IdenticalCircles : public std::domain_error {
public:
    IdenticalCircles() : std::domain_error("circles coincide; intersection is not a finite set") {}
};

class ZeroRadius : public std::domain_error {
public:
    ZeroRadius() : std::domain_error("circle has zero radius") {}
};

class IncompatibleBlocks : public std::invalid_argument {
public:
    explicit IncompatibleBlocks(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed; indicates a bug or an input too degenerate
/// for the configured tolerance.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace ftrans
