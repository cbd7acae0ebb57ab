#pragma once

#include <stdexcept>
#include <string>

namespace sfcsim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SFCSIM_DEFINE_ERROR(Name)           \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    }

SFCSIM_DEFINE_ERROR(TimeBeforeStart);
SFCSIM_DEFINE_ERROR(InvalidPath);
SFCSIM_DEFINE_ERROR(DuplicateSfc);
SFCSIM_DEFINE_ERROR(InsufficientResources);
SFCSIM_DEFINE_ERROR(UnknownSfc);
SFCSIM_DEFINE_ERROR(MalformedScenario);
SFCSIM_DEFINE_ERROR(InvalidParams);
SFCSIM_DEFINE_ERROR(ParseError);
SFCSIM_DEFINE_ERROR(IoError);

#undef SFCSIM_DEFINE_ERROR

// Validation failure that names the offending field and index.
class ValidationError : public Error {
public:
    ValidationError(std::string location, const std::string& message)
        : Error(location + ": " + message), location_(std::move(location)) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

}  // namespace sfcsim
