#pragma once

#include <stdexcept>
#include <string>

namespace cslab {

/// Base of every error the library raises.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Family or graph descriptor outside its allowed parameter range.
class BadSpec : public Error {
public:
    using Error::Error;
};

/// Input exceeds a configured computation cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

class TooManyBlocks : public TooLarge {
public:
    using TooLarge::TooLarge;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

class DegreeMismatch : public Error {
public:
    using Error::Error;
};

class EmptyFunction : public Error {
public:
    using Error::Error;
};

class NotBipartite : public Error {
public:
    using Error::Error;
};

class NotConnected : public Error {
public:
    using Error::Error;
};

class NotStableTriple : public Error {
public:
    using Error::Error;
};

class BadParity : public Error {
public:
    using Error::Error;
};

}  // namespace cslab
