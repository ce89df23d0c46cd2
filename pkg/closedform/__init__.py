# Closed-form package
