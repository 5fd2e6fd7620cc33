#pragma once

#include <iosfwd>
#include <string>

#include "hyperlearn/designs.hpp"
#include "hyperlearn/mdnf.hpp"
#include "hyperlearn/oracle.hpp"

namespace hyperlearn {

// Text formats. Writers emit canonical bytes (single spaces, '\n' endings),
// so serialize(parse(serialize(x))) == serialize(x).

// mdnf n=<n>
// <ascending indices, one term per line>
void write_mdnf(std::ostream& out, const Mdnf& f);
Mdnf read_mdnf(std::istream& in);

// cff n=<n> s=<s> r=<r> m=<m> verified=<0|1|2>
// <m rows of n chars from {0,1}>
void write_cff(std::ostream& out, const DesignMatrix& A);
DesignMatrix read_cff(std::istream& in);

// phf n=<n> q=<q> d=<d> N=<N>
// <N rows of n space-separated values in [1..q]>
void write_phf(std::ostream& out, const HashFamily& P);
HashFamily read_phf(std::istream& in);

// transcript n=<n> k=<k>
// <k rows of "<bits> <answer>">
void write_transcript(std::ostream& out, const Transcript& t);
Transcript read_transcript(std::istream& in);

std::string mdnf_to_string(const Mdnf& f);
Mdnf mdnf_from_string(const std::string& text);

void save_text_file(const std::string& path, const std::string& contents);
std::string load_text_file(const std::string& path);

} // namespace hyperlearn
