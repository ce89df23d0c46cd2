# Series package
