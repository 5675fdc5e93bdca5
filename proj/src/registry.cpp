#include <qgrass/registry.hpp>

#include <stdexcept>

namespace qgrass
{

int VariableRegistry::novikov_count() const
{
    switch (novikov) {
    case Novikov::none:
        return 0;
    case Novikov::single:
        return 1;
    case Novikov::vector:
        return r;
    }
    return 0;
}

int VariableRegistry::size() const { return r + (has_hbar ? 1 : 0) + novikov_count() + equivariant_count; }

int VariableRegistry::hbar() const
{
    if (!has_hbar) {
        throw std::logic_error("registry has no hbar variable");
    }
    return r;
}

int VariableRegistry::q() const
{
    if (novikov != Novikov::single) {
        throw std::logic_error("registry has no single Novikov variable");
    }
    return r + (has_hbar ? 1 : 0);
}

int VariableRegistry::q(int i) const
{
    if (novikov != Novikov::vector || i < 0 || i >= r) {
        throw std::logic_error("registry has no Novikov variable q_" + std::to_string(i + 1));
    }
    return r + (has_hbar ? 1 : 0) + i;
}

int VariableRegistry::lambda(int j) const
{
    if (j < 0 || j >= equivariant_count) {
        throw std::logic_error("registry has no equivariant variable lambda_" + std::to_string(j + 1));
    }
    return r + (has_hbar ? 1 : 0) + novikov_count() + j;
}

bool VariableRegistry::is_lambda(int var) const { return var >= size() - equivariant_count && var < size(); }

std::vector<std::string> VariableRegistry::names() const
{
    std::vector<std::string> out;
    for (int i = 0; i < r; ++i) {
        out.push_back("x" + std::to_string(i + 1));
    }
    if (has_hbar) {
        out.emplace_back("h");
    }
    if (novikov == Novikov::single) {
        out.emplace_back("q");
    } else if (novikov == Novikov::vector) {
        for (int i = 0; i < r; ++i) {
            out.push_back("q" + std::to_string(i + 1));
        }
    }
    for (int j = 0; j < equivariant_count; ++j) {
        out.push_back("l" + std::to_string(j + 1));
    }
    return out;
}

VariableRegistry VariableRegistry::without_x() const
{
    if (novikov == Novikov::vector) {
        throw std::logic_error("vector Novikov variables are indexed by x and cannot be detached");
    }
    VariableRegistry out = *this;
    out.r = 0;
    return out;
}

} // namespace qgrass
