#pragma once

#include <stdexcept>
#include <string>

namespace ainf {

struct NonIntegral : std::runtime_error {
    explicit NonIntegral(const std::string& what) : std::runtime_error(what) {}
};

struct NonLaurent : std::runtime_error {
    explicit NonLaurent(const std::string& what) : std::runtime_error(what) {}
};

struct WindowTooSmall : std::runtime_error {
    explicit WindowTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownPair : std::runtime_error {
    explicit UnknownPair(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfStatedDomain : std::runtime_error {
    explicit OutOfStatedDomain(const std::string& what) : std::runtime_error(what) {}
};

struct BadRank : std::runtime_error {
    explicit BadRank(const std::string& what) : std::runtime_error(what) {}
};

struct NotStated : std::runtime_error {
    explicit NotStated(const std::string& what) : std::runtime_error(what) {}
};

struct LabelRuleError : std::runtime_error {
    explicit LabelRuleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ainf
