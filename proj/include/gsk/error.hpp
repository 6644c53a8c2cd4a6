#pragma once

#include <stdexcept>
#include <string>

namespace gsk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define GSK_DEFINE_ERROR(Name, prefix)                                   \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& reason) : Error(prefix + reason) {} \
  }

GSK_DEFINE_ERROR(NotAGroup, std::string("not a group: "));
GSK_DEFINE_ERROR(GroupTooLarge, std::string("group too large: "));
GSK_DEFINE_ERROR(NotAnAction, std::string("not an action: "));
GSK_DEFINE_ERROR(NotEquivariant, std::string("map is not equivariant: "));
GSK_DEFINE_ERROR(GroupMismatch, std::string("group mismatch: "));
GSK_DEFINE_ERROR(NotInImage, std::string("vector not in the image of the mark map: "));
GSK_DEFINE_ERROR(BadIdentification, std::string("bad identification: "));
GSK_DEFINE_ERROR(ApexTooLarge, std::string("apex too large: "));
GSK_DEFINE_ERROR(UnsupportedGroup, std::string("unsupported group: "));
GSK_DEFINE_ERROR(UnknownObject, std::string("unknown object: "));
GSK_DEFINE_ERROR(ParseError, std::string("parse error: "));
GSK_DEFINE_ERROR(InvalidArgument, std::string("invalid argument: "));

#undef GSK_DEFINE_ERROR

}  // namespace gsk
