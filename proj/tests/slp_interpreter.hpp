// Test-side interpreter for the straight-line programs codegen emits.
// Parses `name = a ^ b`, `name = a & b`, `name = a`, `name = 0` lines and
// runs them on concrete input bits. Independent of the evaluation path in
// the library. Names are interned at parse time so full input sweeps stay
// cheap.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bilmul/gf2_poly.hpp"

namespace slp {

struct Program {
    enum class Op { xor_, and_, copy, const0 };
    struct Stmt {
        Op op;
        int lhs, arg1, arg2;
    };
    std::vector<Stmt> stmts;
    int and_count = 0;
    int n = 0;           // input width
    int slots = 0;       // interned name count
    std::vector<int> x;  // slot of x_i
    std::vector<int> y;
    std::vector<int> z;  // slot of z_i, -1 if never assigned
};

inline Program parse(const std::string& text, int n) {
    Program prog;
    prog.n = n;
    std::map<std::string, int> names;
    auto intern = [&](const std::string& s) {
        auto [it, fresh] = names.emplace(s, prog.slots);
        if (fresh) ++prog.slots;
        return it->second;
    };
    prog.x.resize(static_cast<std::size_t>(n));
    prog.y.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        prog.x[static_cast<std::size_t>(i)] = intern("x" + std::to_string(i));
        prog.y[static_cast<std::size_t>(i)] = intern("y" + std::to_string(i));
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string lhs, eq, a, op, b;
        ls >> lhs >> eq >> a;
        if (eq != "=") throw std::runtime_error("bad statement: " + line);
        Program::Stmt st{};
        if (ls >> op >> b) {
            st.arg1 = intern(a);
            st.arg2 = intern(b);
            if (op == "&") {
                st.op = Program::Op::and_;
                ++prog.and_count;
            } else if (op == "^") {
                st.op = Program::Op::xor_;
            } else {
                throw std::runtime_error("bad operator: " + line);
            }
        } else if (a == "0") {
            st.op = Program::Op::const0;
        } else {
            st.op = Program::Op::copy;
            st.arg1 = intern(a);
        }
        st.lhs = intern(lhs);
        prog.stmts.push_back(st);
    }
    prog.z.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        auto it = names.find("z" + std::to_string(i));
        if (it != names.end()) prog.z[static_cast<std::size_t>(i)] = it->second;
    }
    return prog;
}

// Runs the program on x, y given as bit masks; returns the z bits.
inline bilmul::BinaryPoly run(const Program& prog, const bilmul::BinaryPoly& x, const bilmul::BinaryPoly& y) {
    std::vector<unsigned char> env(static_cast<std::size_t>(prog.slots), 0);
    for (int i = 0; i < prog.n; ++i) {
        env[static_cast<std::size_t>(prog.x[static_cast<std::size_t>(i)])] = x.coeff(i);
        env[static_cast<std::size_t>(prog.y[static_cast<std::size_t>(i)])] = y.coeff(i);
    }
    for (const auto& st : prog.stmts) {
        unsigned char v = 0;
        switch (st.op) {
            case Program::Op::const0: v = 0; break;
            case Program::Op::copy: v = env[static_cast<std::size_t>(st.arg1)]; break;
            case Program::Op::xor_:
                v = env[static_cast<std::size_t>(st.arg1)] ^ env[static_cast<std::size_t>(st.arg2)];
                break;
            case Program::Op::and_:
                v = env[static_cast<std::size_t>(st.arg1)] & env[static_cast<std::size_t>(st.arg2)];
                break;
        }
        env[static_cast<std::size_t>(st.lhs)] = v;
    }
    bilmul::BinaryPoly z;
    for (int i = 0; i < prog.n; ++i) {
        int slot = prog.z[static_cast<std::size_t>(i)];
        if (slot >= 0 && env[static_cast<std::size_t>(slot)]) z.set_coeff(i, true);
    }
    return z;
}

}  // namespace slp
