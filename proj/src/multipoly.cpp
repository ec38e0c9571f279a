namespace adeq {}
