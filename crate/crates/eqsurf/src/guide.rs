// guide chapters are added with the book
